#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Tensor container.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "tenspec/tensor.hpp"

namespace oracle {

using tenspec::CMatrix;
using tenspec::Complex;
using tenspec::CVector;
using tenspec::Tensor;

/// Leibniz expansion, n! terms.
inline Complex leibniz_det(const CMatrix& a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Complex sum = 0.0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        Complex term = inversions % 2 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            term *= a(i, p[i]);
        sum += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

/// Sylvester matrix of binary forms given by coefficient lists c[k] of x0^k x1^{d-k}.
inline CMatrix sylvester_matrix(const std::vector<Complex>& f, const std::vector<Complex>& g)
{
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    CMatrix s = CMatrix::Zero(df + dg, df + dg);
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k)
            s(r, r + k) = f[df - k];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            s(dg + r, r + k) = g[dg - k];
    return s;
}

inline Complex sylvester_det(const std::vector<Complex>& f, const std::vector<Complex>& g)
{
    return leibniz_det(sylvester_matrix(f, g));
}

/// Visits every index tuple of length `order` over {0..dim-1}.
inline void for_each_index(int order, int dim, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> idx(order, 0);
    while (true) {
        fn(idx);
        int k = order - 1;
        while (k >= 0 && ++idx[k] == dim)
            idx[k--] = 0;
        if (k < 0)
            return;
    }
}

inline CVector naive_contract(const Tensor& t, const CVector& x)
{
    CVector v = CVector::Zero(t.dim());
    for_each_index(t.order(), t.dim(), [&](const std::vector<int>& idx) {
        Complex term = t(idx);
        for (std::size_t k = 1; k < idx.size(); ++k)
            term *= x[idx[k]];
        v[idx[0]] += term;
    });
    return v;
}

inline Complex naive_form(const Tensor& t, const CVector& x)
{
    Complex s = 0.0;
    for_each_index(t.order(), t.dim(), [&](const std::vector<int>& idx) {
        Complex term = t(idx);
        for (int i : idx)
            term *= x[i];
        s += term;
    });
    return s;
}

/// Central differences of a holomorphic function along each coordinate.
inline CVector fd_gradient(const std::function<Complex(const CVector&)>& f, const CVector& x, double h = 1e-5)
{
    CVector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        CVector a = x, b = x;
        a[i] += h;
        b[i] -= h;
        g[i] = (f(a) - f(b)) / (2.0 * h);
    }
    return g;
}

inline double rel_err(Complex a, Complex b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline double rel_err(const CVector& a, const CVector& b)
{
    const double s = std::max(a.norm(), b.norm());
    return s == 0.0 ? 0.0 : (a - b).norm() / s;
}

/// Greedy pairing of two multisets under |a-b| / max(1, |a|, |b|).
inline double matched_distance(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size())
        return INFINITY;
    double worst = 0.0;
    for (const auto& z : a) {
        auto best = b.begin();
        double bd = INFINITY;
        for (auto it = b.begin(); it != b.end(); ++it) {
            const double d = std::abs(z - *it) / std::max({1.0, std::abs(z), std::abs(*it)});
            if (d < bd) {
                bd = d;
                best = it;
            }
        }
        worst = std::max(worst, bd);
        b.erase(best);
    }
    return worst;
}

}  // namespace oracle
