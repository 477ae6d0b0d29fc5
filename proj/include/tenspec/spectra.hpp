#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tenspec/homotopy.hpp"
#include "tenspec/polynomial.hpp"
#include "tenspec/resultant.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

enum class EigenKind { e_pair, isotropic, zero };

const char* to_string(EigenKind kind);

/**
 * One projective eigenvector class.
 *
 * rep is canonical (pivot coordinate 1). For E-pairs, lambdas holds the
 * E-eigenvalues of the x^T x = 1 normalisations: one value for even order,
 * the pair {+l, -l} for odd order. residual is the minors residual for
 * classes with nonzero eigenvalue and ||T x^{m-1}|| / (||T|| ||x||^{m-1})
 * for zero-eigenvalue classes, where the minors are dominated by rounding.
 */
struct EigenClass {
    CVector rep;
    Complex xtx;
    EigenKind kind = EigenKind::e_pair;
    std::vector<Complex> lambdas;
    double residual = 0.0;
    /// affine solutions of T x^{m-1} = x that fell into this class
    int affine_count = 0;
};

struct SpectraConfig {
    TrackerConfig tracker;
    /// |Det| <= tol_singular * det_scale marks the tensor singular.
    double tol_singular = 1e-8;
    /// |x^T x| <= tol_isotropic ||x||^2 marks an isotropic class.
    double tol_isotropic = 1e-8;
    /// Minimum number of lambda samples for the characteristic polynomial
    /// (the default degree + 3 applies when this is smaller).
    int samples = 0;
    std::uint64_t seed = 42;
};

struct EigenReport {
    std::vector<EigenClass> classes;
    int paths_tracked = 0;
    int path_failures = 0;
    int diverged = 0;
    int duplicates_merged = 0;
    Complex det;
    double det_scale = 0.0;
    bool singular = false;
    std::vector<std::string> warnings;

    int count(EigenKind kind) const;
};

struct CharPoly {
    UniPoly poly;
    bool odd_order = false;
    int degree_expected = 0;
    /// radius of the lambda sampling circle
    double radius = 1.0;
    int samples = 0;
    std::vector<std::string> warnings;
};

/// ((m-1)^{n+1} - 1) / (m-2): eigenvector classes of a generic tensor.
long long expected_eigen_count(int order, int dim);
/// expected_eigen_count for even order, twice that for odd order.
int expected_charpoly_degree(int order, int dim);
/// (n+1)(m-1)^n, the degree of Det in the tensor entries.
int determinant_degree(int order, int dim);

/// The n+1 forms (T x^{m-1})_i as polynomials in x.
MultiPolySystem contraction_system(const Tensor& t);

/// Resultant of the forms T x^{m-1}; zero iff T x^{m-1} = 0 has a nonzero solution.
ResultantValue determinant_detailed(const Tensor& t);
Complex determinant(const Tensor& t);

/// ||T||_F^{deg Det} times the geometric mean of |Det| over unit-norm random
/// tensors of the same shape (cached per shape).
double determinant_scale(const Tensor& t);

/// |Det| <= tol * determinant_scale.
bool is_singular(const Tensor& t, double tol = 1e-8);

/**
 * E-characteristic polynomial, sampled on a circle in lambda and fitted.
 * Even order: Res_x(T x^{m-1} - lambda (x^T x)^{(m-2)/2} x).
 * Odd order:  Res_{x,b}(T x^{m-1} - lambda b^{m-2} x, x^T x - b^2); its odd
 * coefficients must vanish (checked at 1e-8 relative) and are zeroed.
 */
CharPoly echar_poly(const Tensor& t, const SpectraConfig& cfg = {});

/// max_{i<j} |x_i v_j - x_j v_i| / (||x|| ||v|| + 1e-300), v = T x^{m-1}.
double minors_residual(const Tensor& t, const CVector& x);

/// ||T x^{m-1}|| / (||T||_F ||x||^{m-1}).
double kernel_residual(const Tensor& t, const CVector& x);

/**
 * Enumerates eigenvector classes through the fixed-point system
 * T x^{m-1} = x, and through T x^{m-1} = 0 when the tensor is singular.
 */
EigenReport eigenpairs(const Tensor& t, const SpectraConfig& cfg = {});

class SingularTensorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Union of E-pair eigenvalues. Refuses singular tensors (use eigenpairs).
std::vector<Complex> e_eigenvalues(const Tensor& t, const SpectraConfig& cfg = {});
std::vector<Complex> e_eigenvalues(const EigenReport& report);

class ZeroImageError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Canonical representative of T x^{m-1}. Throws ZeroImageError when the
/// image vanishes (x is then an eigenvector of eigenvalue zero).
CVector projective_map_step(const Tensor& t, const CVector& x);

}  // namespace tenspec
