#include "tenspec/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tenspec {

namespace {

// x_v^k for all v and k <= max exponent, computed once per evaluation.
std::vector<std::vector<Complex>> power_table(const CVector& x, const std::vector<Term>& terms)
{
    const auto n = static_cast<std::size_t>(x.size());
    std::vector<int> maxe(n, 0);
    for (const auto& t : terms)
        for (std::size_t v = 0; v < n; ++v)
            maxe[v] = std::max(maxe[v], t.exponent[v]);
    std::vector<std::vector<Complex>> pw(n);
    for (std::size_t v = 0; v < n; ++v) {
        pw[v].resize(static_cast<std::size_t>(maxe[v]) + 1);
        pw[v][0] = 1.0;
        for (int k = 1; k <= maxe[v]; ++k)
            pw[v][k] = pw[v][k - 1] * x[static_cast<Eigen::Index>(v)];
    }
    return pw;
}

}  // namespace

MultiPoly::MultiPoly(int nvars, const std::vector<Term>& terms) : nvars_(nvars)
{
    for (const auto& t : terms)
        add_term(t.exponent, t.coeff);
}

MultiPoly MultiPoly::constant(int nvars, Complex c)
{
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, Complex c)
{
    Exponent e(nvars, 0);
    e.at(index) = 1;
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, Complex c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear(const CVector& coeffs)
{
    const int n = static_cast<int>(coeffs.size());
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

void MultiPoly::add_term(const Exponent& e, Complex c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionError("exponent length must equal the variable count");
    if (!is_finite(c))
        throw std::invalid_argument("polynomial coefficients must be finite");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& key) { return t.exponent < key; });
    if (it != terms_.end() && it->exponent == e) {
        it->coeff += c;
        if (it->coeff == Complex(0.0))
            terms_.erase(it);
    } else if (c != Complex(0.0)) {
        terms_.insert(it, Term{e, c});
    }
}

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, std::accumulate(t.exponent.begin(), t.exponent.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) {
        return std::accumulate(t.exponent.begin(), t.exponent.end(), 0) == d;
    });
}

Complex MultiPoly::coeff(const Exponent& e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& key) { return t.exponent < key; });
    return it != terms_.end() && it->exponent == e ? it->coeff : Complex(0.0);
}

Complex MultiPoly::eval(const CVector& x) const
{
    if (x.size() != nvars_)
        throw DimensionError("point length must equal the variable count");
    const auto pw = power_table(x, terms_);
    Complex s = 0.0;
    for (const auto& t : terms_) {
        Complex m = t.coeff;
        for (int v = 0; v < nvars_; ++v)
            m *= pw[v][t.exponent[v]];
        s += m;
    }
    return s;
}

Complex MultiPoly::eval_gradient(const CVector& x, CVector& grad) const
{
    if (x.size() != nvars_)
        throw DimensionError("point length must equal the variable count");
    const auto pw = power_table(x, terms_);
    grad = CVector::Zero(nvars_);
    Complex s = 0.0;
    for (const auto& t : terms_) {
        Complex m = t.coeff;
        for (int v = 0; v < nvars_; ++v)
            m *= pw[v][t.exponent[v]];
        s += m;
        for (int v = 0; v < nvars_; ++v) {
            const int a = t.exponent[v];
            if (a == 0)
                continue;
            Complex d = t.coeff * static_cast<double>(a) * pw[v][a - 1];
            for (int w = 0; w < nvars_; ++w)
                if (w != v)
                    d *= pw[w][t.exponent[w]];
            grad[v] += d;
        }
    }
    return s;
}

double MultiPoly::term_scale(const CVector& x) const
{
    double s = 0.0;
    for (const auto& t : terms_) {
        double m = std::abs(t.coeff);
        for (int v = 0; v < nvars_; ++v)
            m *= std::pow(std::abs(x[v]), t.exponent[v]);
        s += m;
    }
    return s;
}

void MultiPoly::check_vars(const MultiPoly& o) const
{
    if (o.nvars_ != nvars_)
        throw DimensionError("polynomials have different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    check_vars(o);
    MultiPoly r(*this);
    for (const auto& t : o.terms_)
        r.add_term(t.exponent, t.coeff);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o.scaled(-1.0); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_vars(o);
    std::map<Exponent, Complex> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Exponent e(nvars_);
            for (int v = 0; v < nvars_; ++v)
                e[v] = a.exponent[v] + b.exponent[v];
            acc[e] += a.coeff * b.coeff;
        }
    MultiPoly r(nvars_);
    for (const auto& [e, c] : acc)
        if (c != Complex(0.0))
            r.terms_.push_back({e, c});
    return r;
}

MultiPoly MultiPoly::scaled(Complex alpha) const
{
    MultiPoly r(nvars_);
    if (alpha == Complex(0.0))
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff *= alpha;
    return r;
}

MultiPoly MultiPoly::pow(int k) const
{
    MultiPoly r = constant(nvars_, 1.0);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

MultiPoly MultiPoly::linear_substitution(const CMatrix& a) const
{
    if (a.rows() != nvars_ || a.cols() != nvars_)
        throw DimensionError("substitution matrix must be nvars x nvars");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int v = 0; v < nvars_; ++v) {
        const MultiPoly lin = linear(a.row(v).transpose());
        powers[v].push_back(constant(nvars_, 1.0));
        for (const auto& t : terms_)
            while (static_cast<int>(powers[v].size()) <= t.exponent[v])
                powers[v].push_back(powers[v].back() * lin);
    }
    MultiPoly r(nvars_);
    for (const auto& t : terms_) {
        MultiPoly m = constant(nvars_, t.coeff);
        for (int v = 0; v < nvars_; ++v)
            if (t.exponent[v] > 0)
                m = m * powers[v][t.exponent[v]];
        r = r + m;
    }
    return r;
}

MultiPolySystem::MultiPolySystem(int nvars, std::vector<MultiPoly> polys)
    : nvars_(nvars), polys_(std::move(polys))
{
    for (const auto& p : polys_)
        if (p.nvars() != nvars_)
            throw DimensionError("all polynomials in a system must share the variable count");
}

std::vector<int> MultiPolySystem::degrees() const
{
    std::vector<int> d;
    for (const auto& p : polys_)
        d.push_back(p.degree());
    return d;
}

bool MultiPolySystem::is_homogeneous() const
{
    return std::all_of(polys_.begin(), polys_.end(), [](const MultiPoly& p) { return p.is_homogeneous(); });
}

CVector MultiPolySystem::eval(const CVector& x) const
{
    CVector f(static_cast<Eigen::Index>(polys_.size()));
    for (std::size_t i = 0; i < polys_.size(); ++i)
        f[static_cast<Eigen::Index>(i)] = polys_[i].eval(x);
    return f;
}

void MultiPolySystem::eval_jacobian(const CVector& x, CVector& f, CMatrix& jac) const
{
    const auto m = static_cast<Eigen::Index>(polys_.size());
    f.resize(m);
    jac.resize(m, nvars_);
    CVector g;
    for (Eigen::Index i = 0; i < m; ++i) {
        f[i] = polys_[static_cast<std::size_t>(i)].eval_gradient(x, g);
        jac.row(i) = g.transpose();
    }
}

double MultiPolySystem::scale(const CVector& x) const
{
    double s = 1.0;
    for (const auto& p : polys_)
        s = std::max(s, p.term_scale(x));
    return s;
}

double MultiPolySystem::relative_residual(const CVector& x) const
{
    if (polys_.empty())
        return 0.0;
    return eval(x).cwiseAbs().maxCoeff() / scale(x);
}

MultiPolySystem MultiPolySystem::linear_substitution(const CMatrix& a) const
{
    std::vector<MultiPoly> out;
    for (const auto& p : polys_)
        out.push_back(p.linear_substitution(a));
    return MultiPolySystem(nvars_, std::move(out));
}

}  // namespace tenspec
