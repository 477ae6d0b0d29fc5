#include "tenspec/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tenspec {

HypersurfaceSpec::HypersurfaceSpec(Tensor tensor, Complex lambda) : tensor_(std::move(tensor)), lambda_(lambda)
{
    if (!is_symmetric(tensor_, kSymmetryTol))
        throw std::invalid_argument("hypersurface operations require a symmetric tensor");
    if (!is_finite(lambda))
        throw std::invalid_argument("lambda must be finite");
}

ValueAndGradient p_value_and_grad(const HypersurfaceSpec& spec, const CVector& x)
{
    const Tensor& t = spec.tensor();
    const double m = t.order();
    const Complex lambda = spec.lambda();
    const CVector v = contract(t, x);
    const Complex form = x.transpose() * v;
    const Complex xtx = x.transpose() * x;
    return {form / m - lambda / 2.0 * xtx - (1.0 / m - 0.5) * lambda, v - lambda * x};
}

Complex q_value(const HypersurfaceSpec& spec, const CVector& x, Complex t)
{
    const Tensor& tt = spec.tensor();
    const int m = tt.order();
    const Complex lambda = spec.lambda();
    const Complex form = apply_form(tt, x);
    const Complex xtx = x.transpose() * x;
    return form / static_cast<double>(m) - std::pow(t, m - 2) * (lambda / 2.0) * xtx -
           std::pow(t, m) * (1.0 / m - 0.5) * lambda;
}

MultiPolySystem gradient_system(const HypersurfaceSpec& spec)
{
    const Tensor& t = spec.tensor();
    const int m = t.order();
    const int dim = t.dim();
    const int nv = dim + 1;
    const Complex lambda = spec.lambda();
    const MultiPolySystem forms = contraction_system(t);
    const MultiPoly tvar = MultiPoly::variable(nv, dim);

    std::vector<MultiPoly> polys;
    for (int i = 0; i < dim; ++i) {
        MultiPoly f(nv);
        for (const auto& term : forms[i].terms()) {
            Exponent e(term.exponent);
            e.push_back(0);
            f.add_term(e, term.coeff);
        }
        polys.push_back(f - (tvar.pow(m - 2) * MultiPoly::variable(nv, i)).scaled(lambda));
    }
    MultiPoly quad(nv);
    for (int i = 0; i < dim; ++i) {
        Exponent e(nv, 0);
        e[i] = 2;
        quad.add_term(e, 1.0);
    }
    quad = quad - tvar.pow(2);
    polys.push_back((tvar.pow(m - 3) * quad).scaled((m - 2) / 2.0 * lambda));
    return MultiPolySystem(nv, std::move(polys));
}

UniPoly discriminant_closed_form(const Tensor& t, Complex det, const UniPoly& chi)
{
    const int m = t.order();
    long long lambda_power = 1;
    for (int k = 0; k < t.dim(); ++k)
        lambda_power *= m - 1;
    UniPoly out = UniPoly::monomial(static_cast<int>(lambda_power)).scaled(std::pow(det, m - 3));
    if (m == 3)  // Det^0 = 1 even for singular tensors
        out = UniPoly::monomial(static_cast<int>(lambda_power));
    return out * (m % 2 == 1 ? chi : chi * chi);
}

UniPoly discriminant_closed_form(const Tensor& t, const SpectraConfig& cfg)
{
    const Complex det = t.order() == 3 ? Complex(1.0) : determinant(t);
    return discriminant_closed_form(t, det, echar_poly(t, cfg).poly);
}

Complex discriminant_direct_sample(const Tensor& t, Complex lambda)
{
    if (lambda == Complex(0.0))
        throw std::invalid_argument("the gradient system degenerates at lambda = 0");
    return macaulay_resultant(gradient_system(HypersurfaceSpec(t, lambda))).value;
}

Complex discriminant_route_constant(int order, int dim)
{
    long long power = 1;
    for (int k = 0; k < dim; ++k)
        power *= order - 1;
    const double c = std::pow((order - 2) / 2.0, static_cast<double>(power));
    return order % 2 == 0 ? -c : c;
}

SingularPointResult singular_point_check(const Tensor& t, const CVector& x, Complex lambda)
{
    SingularPointResult r;
    const Complex xtx = x.transpose() * x;
    if (std::abs(xtx) <= 1e-12 * x.squaredNorm())
        return r;  // isotropic: no x^T x = 1 normalisation
    const CVector xn = x / std::sqrt(xtx);
    const auto pg = p_value_and_grad(HypersurfaceSpec(t, lambda), xn);
    r.p_value = pg.value;
    r.grad_norm = pg.gradient.norm();
    r.grad_scale = contract(t, xn).norm() + std::abs(lambda) * xn.norm();
    r.xtx = xn.transpose() * xn;
    r.singular = std::abs(r.p_value) <= 1e-8 && r.grad_norm <= 1e-8 * r.grad_scale &&
                 std::abs(r.xtx - 1.0) <= 1e-8;
    return r;
}

SingularPointResult singular_point_check(const Tensor& t, const EigenClass& eigclass)
{
    if (eigclass.kind != EigenKind::e_pair || eigclass.lambdas.empty())
        throw std::invalid_argument("singular_point_check needs an E-pair class");
    return singular_point_check(t, eigclass.rep, eigclass.lambdas.front());
}

DiscriminantReport discriminant_report(const Tensor& t, const SpectraConfig& cfg, int count)
{
    if (!is_symmetric(t, kSymmetryTol))
        throw std::invalid_argument("discriminant checks require a symmetric tensor");
    DiscriminantReport rep;
    const CharPoly chi = echar_poly(t, cfg);
    const Complex det = t.order() == 3 ? Complex(1.0) : determinant(t);
    rep.closed_form = discriminant_closed_form(t, det, chi.poly);
    rep.expected_constant = discriminant_route_constant(t.order(), t.dim());

    const int n = std::max(count, rep.closed_form.degree() + 3);
    // offset phase keeps the nodes away from the real axis
    rep.lambdas = circle_nodes(n, chi.radius, 0.1);
    Complex ratio_sum = 0.0;
    std::vector<Complex> ratios;
    for (const auto& lambda : rep.lambdas) {
        const Complex d = discriminant_direct_sample(t, lambda);
        const Complex c = rep.closed_form(lambda);
        rep.direct.push_back(d);
        rep.closed.push_back(c);
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, std::abs(d - c) / std::max(std::abs(d), std::abs(c)));
        ratios.push_back(d / c);
        ratio_sum += d / c;
    }
    rep.measured_constant = ratio_sum / static_cast<double>(ratios.size());
    for (const auto& r : ratios)
        rep.constant_spread = std::max(rep.constant_spread, std::abs(r - rep.measured_constant) /
                                                                std::abs(rep.measured_constant));
    return rep;
}

}  // namespace tenspec
