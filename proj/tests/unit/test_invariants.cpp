#include "doctest.h"
#include "oracles.hpp"

#include "tenspec/invariants.hpp"
#include "tenspec/spectra.hpp"

using namespace tenspec;

namespace {

CMatrix m2(Complex a, Complex b, Complex c, Complex d)
{
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

CMatrix rotation(double th) { return m2(std::cos(th), -std::sin(th), std::sin(th), std::cos(th)); }

CMatrix random_symmetric(std::uint64_t seed)
{
    const CVector v = random_complex_vector(3, seed);
    return m2(v[0], v[1], v[1], v[2]);
}

// the displayed trace expression, evaluated from raw entries
Complex trace_expression(const CMatrix& a, const CMatrix& b)
{
    const Complex ta = a(0, 0) + a(1, 1), tb = b(0, 0) + b(1, 1);
    Complex tab = 0.0, ta2 = 0.0, tb2 = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            tab += a(i, j) * b(j, i);
            ta2 += a(i, j) * a(j, i);
            tb2 += b(i, j) * b(j, i);
        }
    return (ta * tb - tab + ta * ta - ta2) * (tb2 - tb * tb);
}

}  // namespace

TEST_CASE("MatrixPair validation")
{
    CHECK_THROWS_AS(MatrixPair(m2(1, 2, 3, 4), m2(1, 0, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(MatrixPair(CMatrix::Identity(3, 3), m2(1, 0, 0, 1)), DimensionError);
    CHECK_NOTHROW(MatrixPair(m2(1, 2, 2, 4), m2(1, 0, 0, 1)));
}

TEST_CASE("congruence_action examples")
{
    const Tensor t = random_tensor(3, 2, 3);
    CHECK((congruence_action(CMatrix::Identity(2, 2), t) - t).frobenius_norm() == 0.0);

    const CMatrix g = rotation(0.7);
    const Tensor u = congruence_action(g, t);
    const auto before = slice_matrices(t);
    const auto after = slice_matrices(u);
    for (int i = 0; i < 2; ++i) {
        CHECK((after[i] - g * before[i] * g.transpose()).norm() <= 1e-12 * before[i].norm());
        CHECK(std::abs(after[i].trace() - before[i].trace()) <= 1e-10 * before[i].norm());
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs((after[i] * after[j]).trace() - (before[i] * before[j]).trace()) <=
                  1e-10 * before[i].norm() * before[j].norm());
    }

    CHECK_THROWS_AS(congruence_action(m2(2, 0, 0, 1), t), std::invalid_argument);
    CHECK_THROWS_AS(congruence_action(g, random_tensor(4, 2, 1)), DimensionError);
}

TEST_CASE("congruence_action preserves the determinant")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Tensor t = random_tensor(3, 3, 100 + seed);
        const CMatrix g = random_orthogonal(3, 200 + seed);
        CHECK(oracle::rel_err(determinant(congruence_action(g, t)), determinant(t)) <= 1e-6);
    }
}

TEST_CASE("det_trace_formula desk examples")
{
    CHECK(det_trace_formula(MatrixPair(m2(1, 0, 0, 1), m2(1, 0, 0, -1))) == Complex(4.0));
    CHECK(det_trace_formula(MatrixPair(m2(1, 0, 0, 0), m2(0, 0, 0, 1))) == Complex(0.0));
    CHECK(det_trace_formula(MatrixPair(m2(1, 0, 0, 1), m2(1, 0, 0, 1))) == Complex(-8.0));
}

TEST_CASE("det_trace_formula is the displayed expression and conjugation invariant")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CMatrix a = random_symmetric(10 + seed), b = random_symmetric(50 + seed);
        const MatrixPair p(a, b);
        CHECK(oracle::rel_err(det_trace_formula(p), trace_expression(a, b)) <= 1e-14);
        const CMatrix g = rotation(0.3 + seed);
        const MatrixPair q(g * a * g.transpose(), g * b * g.transpose());
        CHECK(oracle::rel_err(det_trace_formula(q), det_trace_formula(p)) <= 1e-10);
    }
}

TEST_CASE("tensor_from_pair places slices by convention")
{
    const MatrixPair p(m2(1, 2, 2, 3), m2(4, 5, 5, 6));
    const Tensor f = tensor_from_pair(p, SlotConvention::first);
    const Tensor m = tensor_from_pair(p, SlotConvention::middle);
    const Tensor l = tensor_from_pair(p, SlotConvention::last);
    const CMatrix* s[] = {&p.a(), &p.b()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const int fi[] = {i, j, k}, mi[] = {j, i, k}, li[] = {j, k, i};
                CHECK(f(fi) == (*s[i])(j, k));
                CHECK(m(mi) == (*s[i])(j, k));
                CHECK(l(li) == (*s[i])(j, k));
            }
    const auto sl = slice_matrices(f);
    CHECK((sl[0] - p.a()).norm() == 0.0);
}

TEST_CASE("det_trace_crosscheck desk examples in the first-slot convention")
{
    const auto a = det_trace_crosscheck(MatrixPair(m2(1, 0, 0, 1), m2(1, 0, 0, -1)), SlotConvention::first);
    CHECK(std::abs(a.oracle - Complex(4.0)) <= 1e-10);
    CHECK(a.formula == Complex(4.0));
    CHECK(a.deviation <= 1e-10);

    const auto b = det_trace_crosscheck(MatrixPair(m2(1, 0, 0, 0), m2(0, 0, 0, 1)), SlotConvention::first);
    CHECK(std::abs(b.oracle - Complex(1.0)) <= 1e-10);
    CHECK(b.formula == Complex(0.0));
    CHECK(b.deviation == doctest::Approx(1.0));

    const auto c = det_trace_crosscheck(MatrixPair(m2(1, 0, 0, 1), m2(1, 0, 0, 1)), SlotConvention::first);
    CHECK(std::abs(c.oracle) <= 1e-10);
    CHECK(c.formula == Complex(-8.0));
    CHECK(c.deviation == doctest::Approx(1.0));

    const auto all = det_trace_crosscheck(MatrixPair(m2(1, 0, 0, 1), m2(1, 0, 0, -1)));
    REQUIRE(all.size() == 3);
    CHECK(all[0].convention == SlotConvention::first);
    CHECK(all[1].convention == SlotConvention::middle);
    CHECK(all[2].convention == SlotConvention::last);
    for (const auto& r : all)
        CHECK(std::isfinite(r.deviation));
}
