#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tenspec/types.hpp"

namespace tenspec {

/**
 * Dense order-m tensor of dimension n+1 over the complex numbers.
 *
 * Entries are stored row-major in the lexicographic order of the index tuple
 * (i_1, ..., i_m), so the last index varies fastest. The symmetric hint is
 * advisory; consumers that need symmetry re-check it with is_symmetric().
 */
class Tensor {
public:
    Tensor(int order, int dim, std::vector<Complex> entries, bool symmetric_hint = false);

    static Tensor zeros(int order, int dim);
    /// Diagonal tensor with t_{i...i} = values[i].
    static Tensor diagonal(int order, std::span<const Complex> values);

    int order() const { return order_; }
    int dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }
    bool symmetric_hint() const { return symmetric_hint_; }

    std::span<const Complex> entries() const { return entries_; }

    Complex operator()(std::span<const int> index) const { return entries_[flat_index(index)]; }
    Complex& operator()(std::span<const int> index) { return entries_[flat_index(index)]; }
    Complex operator[](std::size_t flat) const { return entries_[flat]; }
    Complex& operator[](std::size_t flat) { return entries_[flat]; }

    std::size_t flat_index(std::span<const int> index) const;
    /// Inverse of flat_index.
    std::vector<int> multi_index(std::size_t flat) const;

    double frobenius_norm() const;

    Tensor operator+(const Tensor& other) const;
    Tensor operator-(const Tensor& other) const;
    Tensor scaled(Complex alpha) const;

    void set_symmetric_hint(bool hint) { symmetric_hint_ = hint; }

private:
    int order_;
    int dim_;
    std::vector<Complex> entries_;
    bool symmetric_hint_;
};

/// Number of entries dim^order, checked against overflow.
std::size_t tensor_size(int order, int dim);

/// (T x^{m-1})_i = sum t_{i i2 ... im} x_{i2} ... x_{im}.
CVector contract(const Tensor& t, const CVector& x);

/// x^T (T x^{m-1}), a degree-m form in x.
Complex apply_form(const Tensor& t, const CVector& x);

/// Average over all index permutations. Orbits whose entries already agree are
/// copied unchanged, which makes the operation exactly idempotent.
Tensor symmetrize(const Tensor& t);

/// True when every entry matches its permuted copies within rel_tol * ||T||_F.
bool is_symmetric(const Tensor& t, double rel_tol);

/// Applies g on each listed mode (1-based, as in the index tuple). For m = 3
/// and modes {2,3}: (G.T)_{ijk} = sum_{p,q} t_{ipq} g_{jp} g_{kq}.
Tensor mode_transform(const Tensor& t, const CMatrix& g, std::span<const int> modes);

/// Convenience: all modes 1..m.
Tensor mode_transform_all(const Tensor& t, const CMatrix& g);

/// mats[i](j, k) = t_{ijk}; order-3 tensors only.
std::vector<CMatrix> slice_matrices(const Tensor& t);

/// Entries are independent standard complex Gaussians (re and im ~ N(0,1))
/// drawn from a stream seeded by `seed`.
Tensor random_tensor(int order, int dim, std::uint64_t seed, bool symmetric = false);

struct SingularSample {
    Tensor tensor;
    CVector kernel_point;
};

/// Random tensor with a planted nonzero kernel point x*, T x*^{m-1} = 0.
/// Built as T0 - v (x) w^{(x)(m-1)} / (w^T x*)^{m-1} with v = T0 x*^{m-1}.
SingularSample singular_tensor(int order, int dim, std::uint64_t seed);

/// Standard complex Gaussian vector from a seeded stream.
CVector random_complex_vector(int n, std::uint64_t seed);

/// Random real orthogonal matrix (Q factor of a Gaussian matrix).
CMatrix random_orthogonal(int n, std::uint64_t seed);

}  // namespace tenspec
