#include "tenspec/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace tenspec {

void DegreeProfile::validate() const
{
    if (degrees.size() < 2)
        throw DimensionError("a resultant needs at least two polynomials");
    for (int d : degrees)
        if (d < 1)
            throw DimensionError("resultant degrees must be positive");
}

namespace {

// Exponents of total degree `degree` in n variables, x0^degree first.
void enumerate_monomials(int n, int degree, Exponent& cur, int var, std::vector<Exponent>& out)
{
    if (var == n - 1) {
        cur[var] = degree;
        out.push_back(cur);
        return;
    }
    for (int a = degree; a >= 0; --a) {
        cur[var] = a;
        enumerate_monomials(n, degree - a, cur, var + 1, out);
    }
    cur[var] = 0;
}

}  // namespace

MacaulayLayout build_layout(const DegreeProfile& profile)
{
    profile.validate();
    MacaulayLayout lay;
    lay.profile = profile;
    const int n = profile.nvars();
    lay.total_degree = 1;
    for (int d : profile.degrees)
        lay.total_degree += d - 1;

    Exponent cur(n, 0);
    enumerate_monomials(n, lay.total_degree, cur, 0, lay.monomials);
    for (int c = 0; c < lay.size(); ++c)
        lay.column[lay.monomials[c]] = c;

    for (int r = 0; r < lay.size(); ++r) {
        const auto& a = lay.monomials[r];
        int owner = -1;
        int divisors = 0;
        for (int i = 0; i < n; ++i)
            if (a[i] >= profile.degrees[i]) {
                if (owner < 0)
                    owner = i;
                ++divisors;
            }
        // degree D forces at least one divisor
        Exponent shift = a;
        shift[owner] -= profile.degrees[owner];
        lay.row_poly.push_back(owner);
        lay.row_shift.push_back(std::move(shift));
        if (divisors > 1)
            lay.nonreduced.push_back(r);
    }
    return lay;
}

std::shared_ptr<const MacaulayLayout> cached_layout(const DegreeProfile& profile)
{
    static std::mutex mu;
    static std::map<DegreeProfile, std::shared_ptr<const MacaulayLayout>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(profile);
    if (it != cache.end())
        return it->second;
    auto lay = std::make_shared<const MacaulayLayout>(build_layout(profile));
    cache.emplace(profile, lay);
    return lay;
}

namespace {

void check_system(const MultiPolySystem& system, const MacaulayLayout& layout)
{
    const auto& deg = layout.profile.degrees;
    if (system.nvars() != layout.profile.nvars() || system.size() != deg.size())
        throw DimensionError("system shape does not match the Macaulay layout");
    for (std::size_t i = 0; i < deg.size(); ++i) {
        for (const auto& t : system[i].terms())
            if (std::accumulate(t.exponent.begin(), t.exponent.end(), 0) != deg[i])
                throw DimensionError("polynomial " + std::to_string(i) + " is not homogeneous of degree " +
                                     std::to_string(deg[i]));
    }
}

// Unitary matrix scaled so that det = 1 exactly up to rounding.
CMatrix random_special_unitary(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ();
    const Complex det = q.determinant();
    return q * std::pow(det, -1.0 / n);
}

double sigma_ratio(const CMatrix& m)
{
    if (m.size() == 0)
        return 1.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s[0] == 0.0)
        return 0.0;
    return s[s.size() - 1] / s[0];
}

}  // namespace

CMatrix macaulay_matrix(const MultiPolySystem& system, const MacaulayLayout& layout)
{
    check_system(system, layout);
    const int n = layout.size();
    const int nv = layout.profile.nvars();
    CMatrix m = CMatrix::Zero(n, n);
    Exponent e(nv);
    for (int r = 0; r < n; ++r) {
        const auto& shift = layout.row_shift[r];
        for (const auto& t : system[layout.row_poly[r]].terms()) {
            for (int v = 0; v < nv; ++v)
                e[v] = shift[v] + t.exponent[v];
            m(r, layout.column.at(e)) = t.coeff;
        }
    }
    return m;
}

ResultantValue macaulay_resultant(const MultiPolySystem& system, const MacaulayLayout& layout,
                                  const ResultantOptions& options)
{
    check_system(system, layout);
    // a zero form vanishes everywhere, so the system has common zeros
    for (const auto& p : system.polys())
        if (p.is_zero())
            return {Complex(0.0), 0.0, 0};
    std::mt19937_64 rng(options.seed);
    MultiPolySystem current = system;
    const auto& nr = layout.nonreduced;
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        const CMatrix m = macaulay_matrix(current, layout);
        CMatrix sub(nr.size(), nr.size());
        for (std::size_t i = 0; i < nr.size(); ++i)
            for (std::size_t j = 0; j < nr.size(); ++j)
                sub(i, j) = m(nr[i], nr[j]);

        if (sigma_ratio(sub) >= options.degeneracy_tol) {
            Eigen::PartialPivLU<CMatrix> lu(m);
            const Complex det_m = lu.determinant();
            const Complex det_sub = sub.size() == 0 ? Complex(1.0) : Eigen::PartialPivLU<CMatrix>(sub).determinant();
            const double scale = m.cwiseAbs().maxCoeff();
            const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
            return {det_m / det_sub, scale > 0.0 ? min_pivot / scale : 0.0, attempt};
        }
        if (attempt < options.max_retries)
            current = system.linear_substitution(random_special_unitary(layout.profile.nvars(), rng));
    }
    throw NumericalError("Macaulay extraneous factor stays degenerate after " +
                         std::to_string(options.max_retries) + " random substitutions");
}

ResultantValue macaulay_resultant(const MultiPolySystem& system, const ResultantOptions& options)
{
    for (const auto& p : system.polys())
        if (p.is_zero())
            return {Complex(0.0), 0.0, 0};
    return macaulay_resultant(system, *cached_layout(DegreeProfile{system.degrees()}), options);
}

Complex sylvester_resultant(const UniPoly& f, int deg_f, const UniPoly& g, int deg_g)
{
    if (deg_f < 0 || deg_g < 0 || (deg_f == 0 && deg_g == 0))
        throw std::invalid_argument("Sylvester resultant needs a positive total formal degree");
    if (f.degree() > deg_f || g.degree() > deg_g)
        throw std::invalid_argument("formal degree below actual degree");
    const int n = deg_f + deg_g;
    CMatrix s = CMatrix::Zero(n, n);
    for (int r = 0; r < deg_g; ++r)
        for (int k = 0; k <= deg_f; ++k)
            s(r, r + k) = f.coeff(deg_f - k);
    for (int r = 0; r < deg_f; ++r)
        for (int k = 0; k <= deg_g; ++k)
            s(deg_g + r, r + k) = g.coeff(deg_g - k);
    return Eigen::PartialPivLU<CMatrix>(s).determinant();
}

MultiPoly binary_form(const UniPoly& p, int degree)
{
    if (p.degree() > degree)
        throw std::invalid_argument("formal degree below actual degree");
    MultiPoly f(2);
    for (int k = 0; k <= p.degree(); ++k)
        f.add_term({k, degree - k}, p.coeff(k));
    return f;
}

}  // namespace tenspec
