#pragma once

#include <vector>

#include "tenspec/spectra.hpp"

namespace tenspec {

/// Relative tolerance of the symmetry check guarding every hypersurface operation.
inline constexpr double kSymmetryTol = 1e-10;

/**
 * Affine hypersurface attached to a symmetric tensor and a parameter:
 *   p(x) = (1/m) x^T (T x^{m-1}) - (lambda/2) x^T x - (1/m - 1/2) lambda.
 * Construction verifies symmetry (the hint alone is not trusted).
 */
class HypersurfaceSpec {
public:
    HypersurfaceSpec(Tensor tensor, Complex lambda);

    const Tensor& tensor() const { return tensor_; }
    Complex lambda() const { return lambda_; }

private:
    Tensor tensor_;
    Complex lambda_;
};

struct ValueAndGradient {
    Complex value;
    CVector gradient;
};

/// p(x) and grad p = T x^{m-1} - lambda x.
ValueAndGradient p_value_and_grad(const HypersurfaceSpec& spec, const CVector& x);

/// Homogenisation q(x, t) = (1/m) x^T T x^{m-1} - t^{m-2} (lambda/2) x^T x - t^m (1/m - 1/2) lambda.
Complex q_value(const HypersurfaceSpec& spec, const CVector& x, Complex t);

/**
 * The n+2 forms in (x_0..x_n, t):
 *   T x^{m-1} - lambda t^{m-2} x,   ((m-2)/2) t^{m-3} lambda (x^T x - t^2),
 * all of degree m-1. The first n+1 entries are the x-partials of q; the last
 * one is -dq/dt.
 */
MultiPolySystem gradient_system(const HypersurfaceSpec& spec);

/// lambda^{(m-1)^{n+1}} Det(T)^{m-3} chi(lambda)^k, k = 1 for odd m and 2 for even m.
UniPoly discriminant_closed_form(const Tensor& t, const SpectraConfig& cfg = {});

/// Same product assembled from an already computed determinant and chi.
UniPoly discriminant_closed_form(const Tensor& t, Complex det, const UniPoly& chi);

/// Resultant of gradient_system at lambda (lambda != 0).
Complex discriminant_direct_sample(const Tensor& t, Complex lambda);

/**
 * Normalisation constant expected between the two discriminant routes when
 * the gradient system keeps its (m-2)/2 factor:
 *   direct / closed = ((m-2)/2)^{(m-1)^{n+1}} * (-1 if m even).
 * The factor comes from Res(F, c g) = c^{deg F} Res(F, g); the sign from
 * Res_{x,t}(T x^{m-1} - lambda t^{m-2} x, x^T x - t^2) = -chi^2 for even m.
 */
Complex discriminant_route_constant(int order, int dim);

struct SingularPointResult {
    bool singular = false;
    Complex p_value;
    double grad_norm = 0.0;
    double grad_scale = 0.0;
    Complex xtx;
};

/// At the x^T x = 1 normalisation of x: |p| <= 1e-8 and ||grad p|| <= 1e-8 * scale,
/// scale = ||T x^{m-1}|| + |lambda| ||x||.
SingularPointResult singular_point_check(const Tensor& t, const CVector& x, Complex lambda);

/// Uses the class representative and its first E-eigenvalue.
SingularPointResult singular_point_check(const Tensor& t, const EigenClass& eigclass);

struct DiscriminantReport {
    UniPoly closed_form;
    std::vector<Complex> lambdas;
    std::vector<Complex> direct;
    std::vector<Complex> closed;
    /// max |direct - closed| / max(|direct|, |closed|)
    double max_rel_deviation = 0.0;
    /// mean of direct / closed over the samples and its max relative spread
    Complex measured_constant;
    double constant_spread = 0.0;
    Complex expected_constant;
};

/// Samples both routes on a circle of `count` points (default degree + 3).
DiscriminantReport discriminant_report(const Tensor& t, const SpectraConfig& cfg = {}, int count = 0);

}  // namespace tenspec
