#pragma once

#include <cmath>

#include "tenspec/types.hpp"

namespace tenspec {

/// Index of the largest-modulus coordinate; near-ties (within 1e-9 relative)
/// go to the lowest index.
inline Eigen::Index pivot_index(const CVector& x)
{
    const double top = x.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) >= (1.0 - 1e-9) * top)
            return i;
    return 0;
}

/// Projective representative with the pivot coordinate equal to 1.
inline CVector canonical_representative(const CVector& x)
{
    if (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument("the zero vector has no projective class");
    CVector r = x / x[pivot_index(x)];
    r[pivot_index(x)] = 1.0;
    return r;
}

/// Sine of the Hermitian angle between the lines spanned by u and v.
inline double projective_distance(const CVector& u, const CVector& v)
{
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        return 1.0;
    const CVector a = u / nu;
    const CVector b = v / nv;
    // norm of the part of a orthogonal to b
    return std::min(1.0, (a - b * b.dot(a)).norm());
}

}  // namespace tenspec
