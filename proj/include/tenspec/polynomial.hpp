#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tenspec/types.hpp"

namespace tenspec {

/// Relative threshold below which fitted coefficients are treated as zero.
inline constexpr double kCoefficientTruncation = 1e-9;

/**
 * Dense univariate polynomial with complex coefficients in ascending degree.
 * The highest stored coefficient is nonzero; the zero polynomial has no
 * coefficients and degree -1.
 */
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> coeffs);

    static UniPoly constant(Complex c) { return UniPoly({c}); }
    static UniPoly monomial(int degree, Complex c = 1.0);
    /// prod (z - r) over the given roots.
    static UniPoly from_roots(std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : Complex(0.0); }
    Complex leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

    Complex operator()(Complex z) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(Complex alpha) const;
    UniPoly pow(int k) const;
    UniPoly monic() const;

    /// Max |c_k|; 0 for the zero polynomial.
    double max_abs_coeff() const;

private:
    void trim();
    std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex poly_eval(const UniPoly& p, Complex z);

struct PolyRoot {
    Complex value;
    double residual;  // |p(z)| / sum_k |c_k||z|^k
    bool converged;
};

/// All complex roots with multiplicity: companion-matrix eigenvalues, each
/// polished by at most 100 safeguarded Newton steps. Roots that do not reach
/// the 1e-10 relative residual are kept and flagged.
std::vector<PolyRoot> poly_roots_detailed(const UniPoly& p);
std::vector<Complex> poly_roots(const UniPoly& p);

struct Sample {
    Complex z;
    Complex value;
};

/**
 * Least-squares polynomial fit of degree <= degree_bound (default: one less
 * than the sample count). Columns are scaled by `radius` (default max |z|) so
 * that nodes on a circle give an orthogonal basis; fitted coefficients below
 * kCoefficientTruncation * max|c| in that scaled basis are dropped.
 */
UniPoly interpolate(std::span<const Sample> samples, std::optional<int> degree_bound = std::nullopt,
                    std::optional<double> radius = std::nullopt);

/// `count` equally spaced points on |z| = radius, starting at angle `phase`.
std::vector<Complex> circle_nodes(int count, double radius, double phase = 0.0);

/// Greedy closest-pair matching of two multisets. Returns the largest pair
/// distance, or +inf when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace tenspec
