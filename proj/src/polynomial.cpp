#include "tenspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace tenspec {

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (!is_finite(c))
            throw std::invalid_argument("polynomial coefficients must be finite");
    trim();
}

UniPoly UniPoly::monomial(int degree, Complex c)
{
    std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Complex> roots)
{
    std::vector<Complex> c{1.0};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return UniPoly(std::move(c));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0))
        coeffs_.pop_back();
}

Complex UniPoly::operator()(Complex z) const
{
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    std::vector<Complex> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(-1.0); }

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Complex> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(Complex alpha) const
{
    std::vector<Complex> c(coeffs_);
    for (auto& x : c)
        x *= alpha;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(int k) const
{
    UniPoly r = constant(1.0);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return {};
    return scaled(1.0 / leading());
}

double UniPoly::max_abs_coeff() const
{
    double m = 0.0;
    for (const auto& c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

Complex poly_eval(const UniPoly& p, Complex z) { return p(z); }

namespace {

double eval_scale(const UniPoly& p, Complex z)
{
    double s = 0.0;
    const double az = std::abs(z);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        s = s * az + std::abs(*it);
    return s;
}

double relative_residual(const UniPoly& p, Complex z)
{
    const double s = eval_scale(p, z);
    return s > 0.0 ? std::abs(p(z)) / s : 0.0;
}

}  // namespace

std::vector<PolyRoot> poly_roots_detailed(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("roots of the zero polynomial are undefined");
    const int d = p.degree();
    std::vector<PolyRoot> out;
    if (d == 0)
        return out;

    const UniPoly monic = p.monic();
    CMatrix companion = CMatrix::Zero(d, d);
    for (int i = 1; i < d; ++i)
        companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i)
        companion(i, d - 1) = -monic.coeff(i);
    Eigen::ComplexEigenSolver<CMatrix> es(companion, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("companion eigenvalue iteration failed");

    const UniPoly dp = p.derivative();
    constexpr double kTarget = 1e-10;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        Complex z = es.eigenvalues()[k];
        double res = relative_residual(p, z);
        for (int it = 0; it < 100 && res > 1e-15; ++it) {
            const Complex dz = dp(z);
            if (dz == Complex(0.0))
                break;
            const Complex cand = z - p(z) / dz;
            const double cres = relative_residual(p, cand);
            if (!(cres < res))
                break;
            z = cand;
            res = cres;
        }
        out.push_back({z, res, res <= kTarget});
    }
    return out;
}

std::vector<Complex> poly_roots(const UniPoly& p)
{
    std::vector<Complex> r;
    for (const auto& root : poly_roots_detailed(p))
        r.push_back(root.value);
    return r;
}

std::vector<Complex> circle_nodes(int count, double radius, double phase)
{
    std::vector<Complex> z(count);
    for (int k = 0; k < count; ++k)
        z[k] = std::polar(radius, phase + 2.0 * std::numbers::pi * k / count);
    return z;
}

UniPoly interpolate(std::span<const Sample> samples, std::optional<int> degree_bound,
                    std::optional<double> radius)
{
    const int n = static_cast<int>(samples.size());
    if (n == 0)
        throw std::invalid_argument("interpolation needs at least one sample");
    const int deg = degree_bound.value_or(n - 1);
    if (deg < 0)
        throw std::invalid_argument("degree bound must be nonnegative");
    if (n < deg + 1)
        throw std::invalid_argument("need at least degree+1 samples");

    double r = 0.0;
    for (const auto& s : samples) {
        if (!is_finite(s.z) || !is_finite(s.value))
            throw std::invalid_argument("interpolation samples must be finite");
        r = std::max(r, std::abs(s.z));
    }
    if (radius)
        r = *radius;
    if (!(r > 0.0))
        r = 1.0;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(samples[i].z - samples[j].z) <= 1e-14 * r)
                throw std::invalid_argument("duplicate interpolation nodes");

    CMatrix v(n, deg + 1);
    CVector rhs(n);
    for (int i = 0; i < n; ++i) {
        const Complex w = samples[i].z / r;
        Complex pw = 1.0;
        for (int k = 0; k <= deg; ++k) {
            v(i, k) = pw;
            pw *= w;
        }
        rhs[i] = samples[i].value;
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(v);
    qr.setThreshold(1e-13);
    if (qr.rank() < deg + 1)
        throw NumericalError("interpolation system is rank deficient");
    CVector scaled = qr.solve(rhs);

    double cmax = 0.0;
    for (Eigen::Index k = 0; k < scaled.size(); ++k)
        cmax = std::max(cmax, std::abs(scaled[k]));
    std::vector<Complex> c(deg + 1);
    double rk = 1.0;
    for (int k = 0; k <= deg; ++k) {
        c[k] = std::abs(scaled[k]) < kCoefficientTruncation * cmax ? Complex(0.0) : scaled[k] / rk;
        rk *= r;
    }
    return UniPoly(std::move(c));
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    while (!a.empty()) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return worst;
}

}  // namespace tenspec
