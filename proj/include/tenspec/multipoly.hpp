#pragma once

#include <map>
#include <vector>

#include "tenspec/types.hpp"

namespace tenspec {

using Exponent = std::vector<int>;

struct Term {
    Exponent exponent;
    Complex coeff;
};

/**
 * Sparse multivariate polynomial. Terms are kept sorted by exponent with no
 * duplicates and no zero coefficients.
 */
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    MultiPoly(int nvars, const std::vector<Term>& terms);

    static MultiPoly constant(int nvars, Complex c);
    static MultiPoly variable(int nvars, int index, Complex c = 1.0);
    static MultiPoly monomial(const Exponent& e, Complex c = 1.0);
    /// sum_i coeffs[i] x_i
    static MultiPoly linear(const CVector& coeffs);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Complex coeff(const Exponent& e) const;

    Complex operator()(const CVector& x) const { return eval(x); }
    Complex eval(const CVector& x) const;
    /// Value and gradient at x.
    Complex eval_gradient(const CVector& x, CVector& grad) const;
    /// sum over terms of |c| |x^a|; the natural magnitude for residuals at x.
    double term_scale(const CVector& x) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(Complex alpha) const;
    MultiPoly pow(int k) const;

    /// f(A x): substitutes x_i -> sum_j a_ij x_j.
    MultiPoly linear_substitution(const CMatrix& a) const;

    /// Adds c * x^e (merging with an existing term).
    void add_term(const Exponent& e, Complex c);

private:
    void check_vars(const MultiPoly& o) const;
    int nvars_;
    std::vector<Term> terms_;
};

/// Polynomial list sharing one variable count.
class MultiPolySystem {
public:
    MultiPolySystem() = default;
    MultiPolySystem(int nvars, std::vector<MultiPoly> polys);

    int nvars() const { return nvars_; }
    std::size_t size() const { return polys_.size(); }
    const std::vector<MultiPoly>& polys() const { return polys_; }
    const MultiPoly& operator[](std::size_t i) const { return polys_[i]; }
    std::vector<int> degrees() const;
    bool is_homogeneous() const;

    CVector eval(const CVector& x) const;
    /// Values into f, Jacobian rows into jac.
    void eval_jacobian(const CVector& x, CVector& f, CMatrix& jac) const;
    /// max over polys of term_scale, floored at 1.
    double scale(const CVector& x) const;
    /// ||F(x)||_inf / scale(x)
    double relative_residual(const CVector& x) const;

    MultiPolySystem linear_substitution(const CMatrix& a) const;

private:
    int nvars_ = 0;
    std::vector<MultiPoly> polys_;
};

/// Value of the multivariate polynomial at x (term-wise).
inline Complex multipoly_eval(const MultiPoly& f, const CVector& x) { return f.eval(x); }

}  // namespace tenspec
