#include "tenspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace tenspec {

std::size_t tensor_size(int order, int dim)
{
    if (order < 1 || dim < 1)
        throw DimensionError("tensor order and dimension must be positive");
    std::size_t n = 1;
    for (int k = 0; k < order; ++k) {
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(dim))
            throw DimensionError("tensor too large");
        n *= static_cast<std::size_t>(dim);
    }
    return n;
}

Tensor::Tensor(int order, int dim, std::vector<Complex> entries, bool symmetric_hint)
    : order_(order), dim_(dim), entries_(std::move(entries)), symmetric_hint_(symmetric_hint)
{
    if (order < 3)
        throw DimensionError("tensor order must be at least 3");
    if (dim < 2)
        throw DimensionError("tensor dimension must be at least 2");
    if (entries_.size() != tensor_size(order, dim))
        throw DimensionError("entry count " + std::to_string(entries_.size()) + " != dim^order = " +
                             std::to_string(tensor_size(order, dim)));
    for (const auto& z : entries_)
        if (!is_finite(z))
            throw std::invalid_argument("tensor entries must be finite");
}

Tensor Tensor::zeros(int order, int dim)
{
    return Tensor(order, dim, std::vector<Complex>(tensor_size(order, dim)), true);
}

Tensor Tensor::diagonal(int order, std::span<const Complex> values)
{
    const int dim = static_cast<int>(values.size());
    Tensor t = zeros(order, dim);
    std::vector<int> idx(order);
    for (int i = 0; i < dim; ++i) {
        std::fill(idx.begin(), idx.end(), i);
        t(idx) = values[i];
    }
    return t;
}

std::size_t Tensor::flat_index(std::span<const int> index) const
{
    if (static_cast<int>(index.size()) != order_)
        throw DimensionError("index tuple length must equal the tensor order");
    std::size_t flat = 0;
    for (int i : index) {
        if (i < 0 || i >= dim_)
            throw DimensionError("tensor index out of range");
        flat = flat * dim_ + i;
    }
    return flat;
}

std::vector<int> Tensor::multi_index(std::size_t flat) const
{
    std::vector<int> idx(order_);
    for (int k = order_ - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(flat % dim_);
        flat /= dim_;
    }
    return idx;
}

double Tensor::frobenius_norm() const
{
    double s = 0.0;
    for (const auto& z : entries_)
        s += std::norm(z);
    return std::sqrt(s);
}

Tensor Tensor::operator+(const Tensor& other) const
{
    if (order_ != other.order_ || dim_ != other.dim_)
        throw DimensionError("tensor shapes differ");
    std::vector<Complex> e(entries_);
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += other.entries_[k];
    return Tensor(order_, dim_, std::move(e), symmetric_hint_ && other.symmetric_hint_);
}

Tensor Tensor::operator-(const Tensor& other) const
{
    return *this + other.scaled(-1.0);
}

Tensor Tensor::scaled(Complex alpha) const
{
    std::vector<Complex> e(entries_);
    for (auto& z : e)
        z *= alpha;
    return Tensor(order_, dim_, std::move(e), symmetric_hint_);
}

namespace {

// Contracts the trailing index of a row-major block against x, shrinking the
// block by a factor dim.
std::vector<Complex> contract_last(const std::vector<Complex>& block, const CVector& x)
{
    const auto dim = static_cast<std::size_t>(x.size());
    std::vector<Complex> out(block.size() / dim);
    for (std::size_t r = 0; r < out.size(); ++r) {
        Complex s = 0.0;
        const Complex* row = block.data() + r * dim;
        for (std::size_t k = 0; k < dim; ++k)
            s += row[k] * x[static_cast<Eigen::Index>(k)];
        out[r] = s;
    }
    return out;
}

}  // namespace

CVector contract(const Tensor& t, const CVector& x)
{
    if (x.size() != t.dim())
        throw DimensionError("vector length must equal the tensor dimension");
    std::vector<Complex> block(t.entries().begin(), t.entries().end());
    for (int k = 1; k < t.order(); ++k)
        block = contract_last(block, x);
    return Eigen::Map<CVector>(block.data(), t.dim());
}

Complex apply_form(const Tensor& t, const CVector& x)
{
    return x.transpose() * contract(t, x);
}

Tensor symmetrize(const Tensor& t)
{
    // Orbit of an index tuple under permutations = tuples with the same sorted form.
    std::map<std::vector<int>, std::vector<std::size_t>> orbits;
    for (std::size_t f = 0; f < t.size(); ++f) {
        auto idx = t.multi_index(f);
        std::sort(idx.begin(), idx.end());
        orbits[idx].push_back(f);
    }
    std::vector<Complex> out(t.size());
    for (const auto& [key, members] : orbits) {
        const Complex first = t[members.front()];
        bool uniform = true;
        Complex sum = 0.0;
        for (auto f : members) {
            sum += t[f];
            uniform = uniform && t[f] == first;
        }
        const Complex value = uniform ? first : sum / static_cast<double>(members.size());
        for (auto f : members)
            out[f] = value;
    }
    return Tensor(t.order(), t.dim(), std::move(out), true);
}

bool is_symmetric(const Tensor& t, double rel_tol)
{
    const double scale = std::max(t.frobenius_norm(), std::numeric_limits<double>::min());
    for (std::size_t f = 0; f < t.size(); ++f) {
        auto idx = t.multi_index(f);
        auto sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::abs(t[f] - t(sorted)) > rel_tol * scale)
            return false;
    }
    return true;
}

Tensor mode_transform(const Tensor& t, const CMatrix& g, std::span<const int> modes)
{
    const int dim = t.dim();
    if (g.rows() != dim || g.cols() != dim)
        throw DimensionError("transform matrix must be dim x dim");
    std::vector<Complex> cur(t.entries().begin(), t.entries().end());
    for (int mode : modes) {
        if (mode < 1 || mode > t.order())
            throw DimensionError("mode out of range 1..order");
        // stride of index position (mode-1) in row-major layout
        std::size_t stride = 1;
        for (int k = mode; k < t.order(); ++k)
            stride *= dim;
        const std::size_t outer = cur.size() / (stride * dim);
        std::vector<Complex> next(cur.size());
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t in = 0; in < stride; ++in) {
                const std::size_t base = o * stride * dim + in;
                for (int j = 0; j < dim; ++j) {
                    Complex s = 0.0;
                    for (int p = 0; p < dim; ++p)
                        s += g(j, p) * cur[base + p * stride];
                    next[base + j * stride] = s;
                }
            }
        cur = std::move(next);
    }
    return Tensor(t.order(), dim, std::move(cur), false);
}

Tensor mode_transform_all(const Tensor& t, const CMatrix& g)
{
    std::vector<int> modes(t.order());
    for (int k = 0; k < t.order(); ++k)
        modes[k] = k + 1;
    Tensor out = mode_transform(t, g, modes);
    out.set_symmetric_hint(t.symmetric_hint());
    return out;
}

std::vector<CMatrix> slice_matrices(const Tensor& t)
{
    if (t.order() != 3)
        throw DimensionError("slice matrices are defined for order-3 tensors only");
    const int d = t.dim();
    std::vector<CMatrix> mats(d, CMatrix::Zero(d, d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                mats[i](j, k) = t[(static_cast<std::size_t>(i) * d + j) * d + k];
    return mats;
}

namespace {

std::vector<Complex> gaussian_entries(std::size_t n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> e(n);
    for (auto& z : e) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = Complex(re, im);
    }
    return e;
}

}  // namespace

Tensor random_tensor(int order, int dim, std::uint64_t seed, bool symmetric)
{
    std::mt19937_64 rng(seed);
    Tensor t(order, dim, gaussian_entries(tensor_size(order, dim), rng));
    return symmetric ? symmetrize(t) : t;
}

CVector random_complex_vector(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto e = gaussian_entries(static_cast<std::size_t>(n), rng);
    return Eigen::Map<CVector>(e.data(), n);
}

CMatrix random_orthogonal(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = normal(rng);
    Eigen::HouseholderQR<RMatrix> qr(a);
    RMatrix q = qr.householderQ();
    return q.cast<Complex>();
}

SingularSample singular_tensor(int order, int dim, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Tensor t0(order, dim, gaussian_entries(tensor_size(order, dim), rng));
    auto xs = gaussian_entries(dim, rng);
    CVector x = Eigen::Map<CVector>(xs.data(), dim);

    CVector w;
    Complex wx;
    do {
        auto ws = gaussian_entries(dim, rng);
        w = Eigen::Map<CVector>(ws.data(), dim);
        wx = w.transpose() * x;
    } while (std::abs(wx) < 1e-8 * w.norm() * x.norm());

    const CVector v = contract(t0, x);
    const Complex denom = std::pow(wx, order - 1);
    std::vector<Complex> e(t0.entries().begin(), t0.entries().end());
    // C_{i j2 ... jm} = v_i w_{j2} ... w_{jm} / (w^T x)^{m-1}
    for (std::size_t f = 0; f < e.size(); ++f) {
        const auto idx = t0.multi_index(f);
        Complex c = v[idx[0]] / denom;
        for (int k = 1; k < order; ++k)
            c *= w[idx[k]];
        e[f] -= c;
    }
    return {Tensor(order, dim, std::move(e)), x};
}

}  // namespace tenspec
