#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "tenspec/multipoly.hpp"
#include "tenspec/polynomial.hpp"

using namespace tenspec;

namespace {

const Complex I(0.0, 1.0);

std::vector<Sample> sample(const UniPoly& p, const std::vector<Complex>& nodes)
{
    std::vector<Sample> s;
    for (auto z : nodes)
        s.push_back({z, p(z)});
    return s;
}

bool same_coeffs(const UniPoly& p, std::vector<Complex> want, double tol)
{
    if (p.degree() != static_cast<int>(want.size()) - 1)
        return false;
    for (std::size_t k = 0; k < want.size(); ++k)
        if (std::abs(p.coeff(static_cast<int>(k)) - want[k]) > tol)
            return false;
    return true;
}

UniPoly random_poly(int degree, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& z : c)
        z = {n(rng), n(rng)};
    return UniPoly(c);
}

}  // namespace

TEST_CASE("UniPoly representation")
{
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly({0.0, 0.0}).is_zero());
    CHECK(UniPoly({1.0, 2.0, 0.0}).degree() == 1);
    CHECK_THROWS_AS(UniPoly({Complex(INFINITY, 0.0)}), std::invalid_argument);
}

TEST_CASE("poly_eval examples")
{
    CHECK(std::abs(poly_eval(UniPoly({1.0, 0.0, 1.0}), I)) == 0.0);
    CHECK(poly_eval(UniPoly::constant(1.0), Complex(3.0, -2.0)) == Complex(1.0));
    CHECK(poly_eval(UniPoly::monomial(3), 2.0) == Complex(8.0));
}

TEST_CASE("poly_roots examples")
{
    CHECK(multiset_distance(poly_roots(UniPoly({1.0, 0.0, 1.0})), {I, -I}) < 1e-12);
    CHECK(multiset_distance(poly_roots(UniPoly({2.0, -3.0, 1.0})), {1.0, 2.0}) < 1e-12);

    // (l^2 - 1)(l^2 - 4)(l^2 - 4/5) expanded by convolution
    const UniPoly p = UniPoly({-1.0, 0.0, 1.0}) * UniPoly({-4.0, 0.0, 1.0}) * UniPoly({-0.8, 0.0, 1.0});
    const double r = 2.0 / std::sqrt(5.0);
    CHECK(multiset_distance(poly_roots(p), {1.0, -1.0, 2.0, -2.0, r, -r}) < 1e-10);

    CHECK_THROWS_AS(poly_roots(UniPoly()), std::invalid_argument);
    CHECK(poly_roots(UniPoly::constant(3.0)).empty());
}

TEST_CASE("poly_roots residuals meet the refinement target")
{
    for (int d = 1; d <= 20; ++d) {
        const UniPoly p = random_poly(d, 300 + d);
        for (const auto& r : poly_roots_detailed(p)) {
            CHECK(r.converged);
            CHECK(r.residual <= 1e-10);
        }
    }
}

TEST_CASE("expanding the roots reproduces the monic polynomial")
{
    for (int d = 1; d <= 20; ++d) {
        const UniPoly p = random_poly(d, 100 + d);
        const auto roots = poly_roots(p);
        const UniPoly q = UniPoly::from_roots(roots);
        const UniPoly m = p.monic();
        const double scale = m.max_abs_coeff();
        for (int k = 0; k <= d; ++k)
            CHECK(std::abs(q.coeff(k) - m.coeff(k)) <= 1e-8 * scale);
    }
}

TEST_CASE("interpolate examples")
{
    CHECK(same_coeffs(interpolate(sample(UniPoly::monomial(2), circle_nodes(4, 1.0))), {0.0, 0.0, 1.0}, 1e-12));
    CHECK(same_coeffs(interpolate(sample(UniPoly::constant(5.0), circle_nodes(3, 1.0))), {5.0}, 1e-12));
    CHECK(same_coeffs(interpolate(sample(UniPoly({2.0, -3.0, 1.0}), circle_nodes(5, 1.0))), {2.0, -3.0, 1.0}, 1e-12));
}

TEST_CASE("interpolate rejects bad input")
{
    std::vector<Sample> dup{{1.0, 1.0}, {1.0, 2.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(interpolate(dup), std::invalid_argument);
    std::vector<Sample> few{{1.0, 1.0}};
    CHECK_THROWS_AS(interpolate(few, 2), std::invalid_argument);
}

TEST_CASE("interpolate after sampling is the identity up to degree 30")
{
    for (int d : {1, 5, 12, 20, 30}) {
        const UniPoly p = random_poly(d, 700 + d);
        const double r = 1.7;
        const UniPoly q = interpolate(sample(p, circle_nodes(d + 3, r, 0.2)), d, r);
        double worst = 0.0, scale = 0.0;
        for (int k = 0; k <= d; ++k) {
            worst = std::max(worst, std::abs(q.coeff(k) - p.coeff(k)) * std::pow(r, k));
            scale = std::max(scale, std::abs(p.coeff(k)) * std::pow(r, k));
        }
        CHECK(worst <= 1e-9 * scale);
    }
}

TEST_CASE("ring operations")
{
    const UniPoly a({1.0, 1.0}), b({-1.0, 1.0});
    CHECK(same_coeffs(a * b, {-1.0, 0.0, 1.0}, 0.0));
    CHECK(same_coeffs(a + UniPoly(), {1.0, 1.0}, 0.0));
    CHECK(same_coeffs(UniPoly({-1.0, 0.0, 1.0}).scaled(2.0), {-2.0, 0.0, 2.0}, 0.0));
    CHECK((a - a).is_zero());
    CHECK(same_coeffs(a.pow(3), {1.0, 3.0, 3.0, 1.0}, 0.0));
    CHECK(same_coeffs(UniPoly({1.0, 2.0, 3.0}).derivative(), {2.0, 6.0}, 0.0));
}

TEST_CASE("multiset_distance")
{
    CHECK(multiset_distance({1.0, 2.0}, {2.0, 1.0}) == 0.0);
    CHECK(std::isinf(multiset_distance({1.0}, {1.0, 2.0})));
    CHECK(multiset_distance({1.0, 1.0}, {1.0, 1.5}) == doctest::Approx(0.5));
}

TEST_CASE("multipoly_eval examples")
{
    const MultiPoly x0 = MultiPoly::variable(2, 0), x1 = MultiPoly::variable(2, 1);
    CVector x(2);
    x << 2.0, 3.0;
    CHECK(multipoly_eval(x0 * x1, x) == Complex(6.0));

    const MultiPoly f = (x0.pow(3) + (x0 * x1.pow(2)).scaled(Complex(0.5, -1.0)) - x1.pow(3));
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 3);
    const CVector y = random_complex_vector(2, 3);
    CHECK(oracle::rel_err(multipoly_eval(f, 2.0 * y), 8.0 * multipoly_eval(f, y)) <= 1e-14);

    CHECK(multipoly_eval(MultiPoly(2), x) == Complex(0.0));
    CHECK_THROWS_AS(multipoly_eval(f, CVector::Zero(3)), DimensionError);
}

TEST_CASE("MultiPoly keeps a canonical term list")
{
    MultiPoly p(2);
    p.add_term({1, 1}, 2.0);
    p.add_term({1, 1}, -2.0);
    CHECK(p.is_zero());
    p.add_term({2, 0}, 1.0);
    p.add_term({2, 0}, 1.0);
    CHECK(p.terms().size() == 1);
    CHECK(p.coeff({2, 0}) == Complex(2.0));
    CHECK_THROWS_AS(p.add_term({1}, 1.0), DimensionError);
    CHECK_FALSE((MultiPoly::variable(2, 0) + MultiPoly::constant(2, 1.0)).is_homogeneous());
}

TEST_CASE("MultiPoly gradient and Jacobian match finite differences")
{
    const MultiPoly x0 = MultiPoly::variable(3, 0), x1 = MultiPoly::variable(3, 1), x2 = MultiPoly::variable(3, 2);
    const MultiPoly f = x0.pow(2) * x1 + (x2.pow(3)).scaled(Complex(0.0, 2.0)) - x0 * x1 * x2 + MultiPoly::constant(3, 4.0);
    const CVector x = random_complex_vector(3, 17);
    CVector g;
    const Complex v = f.eval_gradient(x, g);
    CHECK(oracle::rel_err(v, f(x)) < 1e-15);
    CHECK(oracle::rel_err(g, oracle::fd_gradient([&](const CVector& y) { return f(y); }, x)) < 1e-8);

    const MultiPolySystem sys(3, {f, x0 * x1 - x2, x2.pow(2)});
    CVector val;
    CMatrix jac;
    sys.eval_jacobian(x, val, jac);
    for (int i = 0; i < 3; ++i) {
        const auto fi = [&](const CVector& y) { return sys[static_cast<std::size_t>(i)](y); };
        CHECK(oracle::rel_err(CVector(jac.row(i).transpose()), oracle::fd_gradient(fi, x)) < 1e-8);
    }
}

TEST_CASE("linear substitution composes evaluation")
{
    const MultiPoly x0 = MultiPoly::variable(2, 0), x1 = MultiPoly::variable(2, 1);
    const MultiPoly f = x0.pow(2) * x1 - x1.pow(3).scaled(3.0);
    const CMatrix a = CMatrix::Random(2, 2);
    const CVector y = random_complex_vector(2, 4);
    CHECK(oracle::rel_err(f.linear_substitution(a)(y), f(CVector(a * y))) < 1e-13);
}

TEST_CASE("MultiPolySystem bookkeeping")
{
    const MultiPoly x0 = MultiPoly::variable(2, 0), x1 = MultiPoly::variable(2, 1);
    CHECK_THROWS_AS(MultiPolySystem(2, {x0, MultiPoly::variable(3, 0)}), DimensionError);
    const MultiPolySystem s(2, {x0.pow(2), x0 * x1 - x1});
    CHECK(s.degrees() == std::vector<int>{2, 2});
    CHECK_FALSE(s.is_homogeneous());
    CHECK(MultiPolySystem(2, {}).relative_residual(CVector::Zero(2)) == 0.0);
}
