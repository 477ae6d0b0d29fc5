#include "tenspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "tenspec/projective.hpp"

namespace tenspec {

const char* to_string(EigenKind kind)
{
    switch (kind) {
    case EigenKind::e_pair:
        return "E";
    case EigenKind::isotropic:
        return "isotropic";
    case EigenKind::zero:
        return "zero";
    }
    return "?";
}

int EigenReport::count(EigenKind kind) const
{
    return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                          [kind](const EigenClass& c) { return c.kind == kind; }));
}

namespace {

long long ipow(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

// x^T x in `nvars` variables using the first `dim` of them.
MultiPoly quadric(int nvars, int dim)
{
    MultiPoly q(nvars);
    for (int i = 0; i < dim; ++i) {
        Exponent e(nvars, 0);
        e[i] = 2;
        q.add_term(e, 1.0);
    }
    return q;
}

MultiPoly widen(const MultiPoly& p, int nvars)
{
    MultiPoly w(nvars);
    for (const auto& t : p.terms()) {
        Exponent e(t.exponent);
        e.resize(nvars, 0);
        w.add_term(e, t.coeff);
    }
    return w;
}

}  // namespace

long long expected_eigen_count(int order, int dim)
{
    return (ipow(order - 1, dim) - 1) / (order - 2);
}

int expected_charpoly_degree(int order, int dim)
{
    const auto base = static_cast<int>(expected_eigen_count(order, dim));
    return order % 2 == 0 ? base : 2 * base;
}

int determinant_degree(int order, int dim)
{
    return dim * static_cast<int>(ipow(order - 1, dim - 1));
}

MultiPolySystem contraction_system(const Tensor& t)
{
    const int dim = t.dim();
    std::vector<MultiPoly> forms(dim, MultiPoly(dim));
    Exponent e(dim);
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f] == Complex(0.0))
            continue;
        const auto idx = t.multi_index(f);
        std::fill(e.begin(), e.end(), 0);
        for (int k = 1; k < t.order(); ++k)
            ++e[idx[k]];
        forms[idx[0]].add_term(e, t[f]);
    }
    return MultiPolySystem(dim, std::move(forms));
}

ResultantValue determinant_detailed(const Tensor& t)
{
    const MultiPolySystem sys = contraction_system(t);
    DegreeProfile profile{std::vector<int>(t.dim(), t.order() - 1)};
    return macaulay_resultant(sys, *cached_layout(profile));
}

Complex determinant(const Tensor& t) { return determinant_detailed(t).value; }

double determinant_scale(const Tensor& t)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, double> unit_scale;
    const auto key = std::make_pair(t.order(), t.dim());
    double c = 0.0;
    {
        std::lock_guard lock(mu);
        auto it = unit_scale.find(key);
        if (it != unit_scale.end())
            c = it->second;
    }
    if (c == 0.0) {
        constexpr int kSamples = 8;
        double log_sum = 0.0;
        for (int s = 0; s < kSamples; ++s) {
            const Tensor r = random_tensor(t.order(), t.dim(), 0xde7ULL + s);
            const Tensor unit = r.scaled(1.0 / r.frobenius_norm());
            log_sum += std::log(std::abs(determinant(unit)));
        }
        c = std::exp(log_sum / kSamples);
        std::lock_guard lock(mu);
        unit_scale[key] = c;
    }
    return c * std::pow(t.frobenius_norm(), determinant_degree(t.order(), t.dim()));
}

bool is_singular(const Tensor& t, double tol)
{
    return std::abs(determinant(t)) <= tol * determinant_scale(t);
}

namespace {

// System whose resultant is chi(lambda): base + lambda * shift (+ fixed extra).
struct CharSystem {
    int nvars = 0;
    std::vector<MultiPoly> base;
    std::vector<MultiPoly> shift;
    DegreeProfile profile;

    MultiPolySystem at(Complex lambda) const
    {
        std::vector<MultiPoly> polys;
        for (std::size_t i = 0; i < base.size(); ++i)
            polys.push_back(base[i] + shift[i].scaled(lambda));
        return MultiPolySystem(nvars, std::move(polys));
    }
};

CharSystem char_system(const Tensor& t)
{
    const int m = t.order();
    const int dim = t.dim();
    const MultiPolySystem forms = contraction_system(t);
    CharSystem cs;
    if (m % 2 == 0) {
        cs.nvars = dim;
        const MultiPoly qpow = quadric(dim, dim).pow((m - 2) / 2);
        for (int i = 0; i < dim; ++i) {
            cs.base.push_back(forms[i]);
            cs.shift.push_back((qpow * MultiPoly::variable(dim, i)).scaled(-1.0));
        }
        cs.profile.degrees.assign(dim, m - 1);
    } else {
        // variables (x_0..x_n, beta)
        cs.nvars = dim + 1;
        const MultiPoly bpow = MultiPoly::variable(dim + 1, dim).pow(m - 2);
        for (int i = 0; i < dim; ++i) {
            cs.base.push_back(widen(forms[i], dim + 1));
            cs.shift.push_back((bpow * MultiPoly::variable(dim + 1, i)).scaled(-1.0));
        }
        cs.base.push_back(quadric(dim + 1, dim) - MultiPoly::variable(dim + 1, dim).pow(2));
        cs.shift.push_back(MultiPoly(dim + 1));
        cs.profile.degrees.assign(dim, m - 1);
        cs.profile.degrees.push_back(2);
    }
    return cs;
}

UniPoly fit_on_circle(const CharSystem& cs, const MacaulayLayout& layout, int degree, int count, double radius,
                      std::uint64_t seed)
{
    std::vector<Sample> samples;
    int failures = 0;
    const double spacing = 2.0 * std::numbers::pi / count;
    for (int k = 0; k < count; ++k) {
        for (int attempt = 0;; ++attempt) {
            // failed nodes are nudged along the circle
            const Complex z = std::polar(radius, spacing * (k + 0.37 * attempt));
            try {
                ResultantOptions opt;
                opt.seed = seed + static_cast<std::uint64_t>(k * 7919 + attempt);
                samples.push_back({z, macaulay_resultant(cs.at(z), layout, opt).value});
                break;
            } catch (const NumericalError&) {
                if (++failures > count)
                    throw NumericalError("too many degenerate resultant samples for the characteristic polynomial");
            }
        }
    }
    return interpolate(samples, degree, radius);
}

}  // namespace

CharPoly echar_poly(const Tensor& t, const SpectraConfig& cfg)
{
    CharPoly out;
    out.odd_order = t.order() % 2 == 1;
    out.degree_expected = expected_charpoly_degree(t.order(), t.dim());
    out.samples = std::max(cfg.samples, out.degree_expected + 3);

    const CharSystem cs = char_system(t);
    const auto layout = cached_layout(cs.profile);

    const double norm = t.frobenius_norm();
    double radius = norm > 0.0 ? norm / std::sqrt(static_cast<double>(t.dim())) : 1.0;
    UniPoly chi = fit_on_circle(cs, *layout, out.degree_expected, out.samples, radius, cfg.seed);

    // Re-sample on the circle through the geometric mean of the moduli of the
    // nonzero roots; a vanishing low coefficient may be a truncation artefact.
    for (int pass = 0; pass < 2 && chi.degree() >= 1; ++pass) {
        int low = 0;
        while (low < chi.degree() && chi.coeff(low) == Complex(0.0))
            ++low;
        if (low == chi.degree())
            break;
        const double root_scale = std::pow(std::abs(chi.coeff(low) / chi.leading()), 1.0 / (chi.degree() - low));
        if (!std::isfinite(root_scale) || root_scale <= 0.0 || (root_scale <= 2.0 * radius && root_scale >= 0.5 * radius))
            break;
        radius = root_scale;
        chi = fit_on_circle(cs, *layout, out.degree_expected, out.samples, radius, cfg.seed);
    }
    out.radius = radius;

    if (out.odd_order && !chi.is_zero()) {
        // odd powers vanish identically; compare in the radius-scaled basis
        double top = 0.0;
        for (int k = 0; k <= chi.degree(); ++k)
            top = std::max(top, std::abs(chi.coeff(k)) * std::pow(radius, k));
        std::vector<Complex> c(chi.coeffs());
        for (int k = 1; k <= chi.degree(); k += 2) {
            if (std::abs(c[k]) * std::pow(radius, k) > 1e-8 * top)
                throw NumericalError("odd-power coefficient of an odd-order characteristic polynomial is not negligible");
            c[k] = 0.0;
        }
        chi = UniPoly(std::move(c));
    }
    if (chi.is_zero())
        out.warnings.push_back("characteristic polynomial vanishes identically");
    else if (chi.degree() < out.degree_expected)
        out.warnings.push_back("characteristic polynomial degree " + std::to_string(chi.degree()) +
                               " below the generic value " + std::to_string(out.degree_expected));
    out.poly = std::move(chi);
    return out;
}

double minors_residual(const Tensor& t, const CVector& x)
{
    const CVector v = contract(t, x);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = i + 1; j < x.size(); ++j)
            worst = std::max(worst, std::abs(x[i] * v[j] - x[j] * v[i]));
    return worst / (x.norm() * v.norm() + 1e-300);
}

double kernel_residual(const Tensor& t, const CVector& x)
{
    const double denom = t.frobenius_norm() * std::pow(x.norm(), t.order() - 1);
    return denom > 0.0 ? contract(t, x).norm() / denom : 0.0;
}

namespace {

EigenClass make_class(const Tensor& t, const CVector& x, EigenKind forced, bool force, double tol_isotropic)
{
    EigenClass c;
    c.rep = canonical_representative(x);
    c.xtx = c.rep.transpose() * c.rep;
    if (force) {
        c.kind = forced;
    } else {
        c.kind = std::abs(c.xtx) <= tol_isotropic * c.rep.squaredNorm() ? EigenKind::isotropic : EigenKind::e_pair;
    }
    if (c.kind == EigenKind::zero) {
        c.residual = kernel_residual(t, c.rep);
        return c;
    }
    c.residual = minors_residual(t, c.rep);
    if (c.kind == EigenKind::e_pair) {
        const CVector xn = c.rep / std::sqrt(c.xtx);
        const Complex lambda = apply_form(t, xn);
        c.lambdas.push_back(lambda);
        if (t.order() % 2 == 1)
            c.lambdas.push_back(-lambda);
    }
    return c;
}

}  // namespace

EigenReport eigenpairs(const Tensor& t, const SpectraConfig& cfg)
{
    const int m = t.order();
    const int dim = t.dim();
    EigenReport rep;
    if (t.frobenius_norm() == 0.0) {
        rep.singular = true;
        rep.warnings.push_back("zero tensor: every nonzero vector is an eigenvector of eigenvalue zero");
        return rep;
    }

    // T x^{m-1} - x = 0
    const MultiPolySystem forms = contraction_system(t);
    std::vector<MultiPoly> fixed;
    for (int i = 0; i < dim; ++i)
        fixed.push_back(forms[i] - MultiPoly::variable(dim, i));
    const SolutionSet sol = solve_square(MultiPolySystem(dim, fixed), cfg.tracker, cfg.seed);
    rep.paths_tracked = sol.paths_tracked;
    rep.path_failures = sol.path_failures;
    rep.diverged = sol.diverged;
    rep.duplicates_merged = sol.duplicates_merged;
    if (sol.nonisolated_warning)
        rep.warnings.push_back("solver endpoints cluster: eigenvectors may not be isolated");

    std::vector<CVector> reps;
    std::vector<int> counts;
    std::vector<double> best;
    for (std::size_t k = 0; k < sol.points.size(); ++k) {
        const CVector& x = sol.points[k];
        if (x.cwiseAbs().maxCoeff() <= 1e-8)
            continue;
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (projective_distance(reps[c], x) <= cfg.tracker.dedup_radius) {
                ++counts[c];
                if (sol.residuals[k] < best[c]) {
                    best[c] = sol.residuals[k];
                    reps[c] = x;
                }
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(x);
            counts.push_back(1);
            best.push_back(sol.residuals[k]);
        }
    }
    bool bookkeeping_ok = true;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        EigenClass ec = make_class(t, reps[c], EigenKind::e_pair, false, cfg.tol_isotropic);
        ec.affine_count = counts[c];
        bookkeeping_ok = bookkeeping_ok && counts[c] == m - 2;
        rep.classes.push_back(std::move(ec));
    }
    if (!bookkeeping_ok)
        rep.warnings.push_back("an eigenvector class did not receive exactly m-2 affine solutions");

    bool check_kernel = false;
    try {
        rep.det = determinant(t);
        rep.det_scale = determinant_scale(t);
        rep.singular = std::abs(rep.det) <= cfg.tol_singular * rep.det_scale;
        check_kernel = rep.singular;
    } catch (const NumericalError& e) {
        rep.warnings.push_back(std::string("determinant unavailable: ") + e.what());
        check_kernel = true;
    }
    if (check_kernel) {
        const CVector chart = random_complex_vector(dim, cfg.seed ^ 0xc4a27ULL);
        const SolutionSet zero = solve_projective(forms, chart, cfg.tracker, cfg.seed);
        rep.path_failures += zero.path_failures;
        for (const auto& x : zero.points)
            rep.classes.push_back(make_class(t, x, EigenKind::zero, true, cfg.tol_isotropic));
        if (zero.nonisolated_warning)
            rep.warnings.push_back("kernel solve endpoints cluster: zero eigenvectors may not be isolated");
    }
    if (rep.path_failures > 0)
        rep.warnings.push_back(std::to_string(rep.path_failures) + " homotopy path(s) failed");
    return rep;
}

std::vector<Complex> e_eigenvalues(const EigenReport& report)
{
    std::vector<Complex> out;
    for (const auto& c : report.classes)
        if (c.kind == EigenKind::e_pair)
            out.insert(out.end(), c.lambdas.begin(), c.lambdas.end());
    return out;
}

std::vector<Complex> e_eigenvalues(const Tensor& t, const SpectraConfig& cfg)
{
    if (std::abs(determinant(t)) <= cfg.tol_singular * determinant_scale(t))
        throw SingularTensorError("tensor is singular; E-eigenvalues are not determined by the characteristic "
                                  "polynomial, use eigenpairs()");
    return e_eigenvalues(eigenpairs(t, cfg));
}

CVector projective_map_step(const Tensor& t, const CVector& x)
{
    const CVector v = contract(t, x);
    const double bound = 1e-12 * t.frobenius_norm() * std::pow(x.norm(), t.order() - 1);
    if (v.norm() <= bound)
        throw ZeroImageError("T x^{m-1} vanishes: x is an eigenvector of eigenvalue zero");
    return canonical_representative(v);
}

}  // namespace tenspec
