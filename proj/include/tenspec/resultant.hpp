#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "tenspec/multipoly.hpp"
#include "tenspec/polynomial.hpp"

namespace tenspec {

/// Degrees of a square homogeneous system: one polynomial per variable.
struct DegreeProfile {
    std::vector<int> degrees;

    int nvars() const { return static_cast<int>(degrees.size()); }
    void validate() const;
    auto operator<=>(const DegreeProfile&) const = default;
};

/**
 * Index structure of the Macaulay matrix for a degree profile.
 *
 * Rows and columns are both indexed by the monomials of degree
 * D = sum(d_i - 1) + 1. The row of monomial x^a holds the coefficients of
 * (x^a / x_i^{d_i}) f_i, with i the first variable such that x_i^{d_i} | x^a.
 * Monomials divisible by more than one x_i^{d_i} are non-reduced; they index
 * the extraneous minor M'.
 */
struct MacaulayLayout {
    DegreeProfile profile;
    int total_degree = 0;
    std::vector<Exponent> monomials;
    std::map<Exponent, int> column;
    std::vector<int> row_poly;
    std::vector<Exponent> row_shift;
    std::vector<int> nonreduced;

    int size() const { return static_cast<int>(monomials.size()); }
};

MacaulayLayout build_layout(const DegreeProfile& profile);

/// Process-wide cache; layouts are immutable once built.
std::shared_ptr<const MacaulayLayout> cached_layout(const DegreeProfile& profile);

struct ResultantOptions {
    int max_retries = 5;
    /// sigma_min / sigma_max of M' below this marks the quotient as degenerate.
    double degeneracy_tol = 1e-12;
    std::uint64_t seed = 0x5eed;
};

struct ResultantValue {
    Complex value;
    /// min |pivot| / max |entry| of the LU of M; reported only.
    double condition = 0.0;
    int retries = 0;
};

/// Fills the Macaulay matrix M for the system (rows/cols in layout order).
CMatrix macaulay_matrix(const MultiPolySystem& system, const MacaulayLayout& layout);

/**
 * Resultant via det(M) / det(M'). When M' is numerically singular the
 * system is re-expressed in variables y = A x with a random unitary A
 * normalised to det(A) = 1, which leaves the resultant unchanged.
 * Throws NumericalError if M' stays degenerate after max_retries.
 */
ResultantValue macaulay_resultant(const MultiPolySystem& system, const MacaulayLayout& layout,
                                  const ResultantOptions& options = {});

/// Builds (or reuses) the layout matching the system's degrees.
ResultantValue macaulay_resultant(const MultiPolySystem& system, const ResultantOptions& options = {});

/**
 * Resultant of two binary forms given as dehomogenised polynomials:
 * f(x0, x1) = sum_k c_k x0^k x1^{deg_f - k}. Formal degrees may exceed the
 * actual ones (leading zeros). Normalised so that Res(x0^p, x1^q) = 1.
 */
Complex sylvester_resultant(const UniPoly& f, int deg_f, const UniPoly& g, int deg_g);

/// Binary form of formal degree `degree` as a two-variable MultiPoly.
MultiPoly binary_form(const UniPoly& p, int degree);

}  // namespace tenspec
