#include "tenspec/homotopy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "tenspec/projective.hpp"

namespace tenspec {

void TrackerConfig::validate() const
{
    if (!(initial_step > 0 && min_step > 0 && corrector_tol > 0 && polish_tol > 0 && dedup_radius > 0 &&
          divergence_bound > 0 && max_corrections > 0))
        throw std::invalid_argument("tracker settings must be positive");
    if (!(min_step < initial_step))
        throw std::invalid_argument("min_step must be below initial_step");
}

namespace {

double inf_norm(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

enum class PathStatus { converged, failed, diverged };

struct PathOutcome {
    PathStatus status = PathStatus::failed;
    CVector x;
    double residual = 0.0;
    double s = 0.0;
};

class Homotopy {
public:
    Homotopy(const MultiPolySystem& target, Complex gamma) : target_(target), gamma_(gamma)
    {
        degrees_ = target.degrees();
    }

    // H(x,s), dH/dx and dH/ds
    void eval(const CVector& x, double s, CVector& h, CMatrix& hx, CVector& hs) const
    {
        CVector f;
        CMatrix jf;
        target_.eval_jacobian(x, f, jf);
        const auto n = x.size();
        CVector g(n);
        CMatrix jg = CMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const int d = degrees_[static_cast<std::size_t>(i)];
            const Complex pm1 = std::pow(x[i], d - 1);
            g[i] = pm1 * x[i] - 1.0;
            jg(i, i) = static_cast<double>(d) * pm1;
        }
        h = (1.0 - s) * gamma_ * g + s * f;
        hx = (1.0 - s) * gamma_ * jg + s * jf;
        hs = f - gamma_ * g;
    }

    const MultiPolySystem& target() const { return target_; }

private:
    const MultiPolySystem& target_;
    Complex gamma_;
    std::vector<int> degrees_;
};

// Newton on the target system; stops once the relative residual reaches
// `tol` or stops improving.
double polish(const MultiPolySystem& f, CVector& x, double tol, int max_iter)
{
    double res = f.relative_residual(x);
    CVector val;
    CMatrix jac;
    for (int it = 0; it < max_iter && res > tol; ++it) {
        f.eval_jacobian(x, val, jac);
        const CVector dx = jac.partialPivLu().solve(-val);
        if (!dx.allFinite())
            break;
        const CVector cand = x + dx;
        const double cres = f.relative_residual(cand);
        if (!(cres < res))
            break;
        x = cand;
        res = cres;
    }
    return res;
}

PathOutcome track(const Homotopy& hom, const CVector& start, const TrackerConfig& cfg)
{
    PathOutcome out;
    CVector x = start;
    double s = 0.0;
    double h = cfg.initial_step;
    int streak = 0;
    CVector hv, hs;
    CMatrix hx;

    while (s < 1.0) {
        h = std::min(h, 1.0 - s);
        hom.eval(x, s, hv, hx, hs);
        const CVector dx = hx.partialPivLu().solve(-hs);
        const double xnorm = 1.0 + inf_norm(x);
        // keep the predicted move a small fraction of |x|
        const double speed = inf_norm(dx);
        if (dx.allFinite() && h * speed > 0.1 * xnorm && h > cfg.min_step)
            h = std::max(cfg.min_step, 0.1 * xnorm / speed);

        bool ok = dx.allFinite();
        const double s1 = std::min(1.0, s + h);
        CVector xp = x + h * dx;
        if (ok) {
            ok = false;
            double prev = 0.0;
            for (int k = 0; k < cfg.max_corrections; ++k) {
                hom.eval(xp, s1, hv, hx, hs);
                const CVector delta = hx.partialPivLu().solve(-hv);
                if (!delta.allFinite())
                    break;
                const double dn = inf_norm(delta);
                if (k == 0 && dn > 0.1 * xnorm)
                    break;
                if (k > 0 && dn > 0.5 * prev)
                    break;
                xp += delta;
                prev = dn;
                if (dn <= cfg.corrector_tol * (1.0 + inf_norm(xp))) {
                    ok = true;
                    break;
                }
            }
        }

        if (ok) {
            x = xp;
            s = s1;
            if (++streak >= 3) {
                h = std::min(2.0 * h, cfg.initial_step);
                streak = 0;
            }
            if (inf_norm(x) > cfg.divergence_bound) {
                out.status = PathStatus::diverged;
                out.x = x;
                out.s = s;
                return out;
            }
        } else {
            streak = 0;
            h *= 0.5;
            if (h < cfg.min_step) {
                out.x = x;
                out.s = s;
                out.status = inf_norm(x) > std::sqrt(cfg.divergence_bound) ? PathStatus::diverged : PathStatus::failed;
                return out;
            }
        }
    }

    out.x = x;
    out.s = 1.0;
    out.residual = polish(hom.target(), out.x, cfg.polish_tol, 20);
    out.status = out.residual <= cfg.corrector_tol ? PathStatus::converged : PathStatus::failed;
    return out;
}

std::vector<CVector> start_points(const std::vector<int>& degrees)
{
    std::vector<CVector> pts;
    const auto n = degrees.size();
    std::vector<int> k(n, 0);
    while (true) {
        CVector p(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            p[static_cast<Eigen::Index>(i)] = std::polar(1.0, 2.0 * std::numbers::pi * k[i] / degrees[i]);
        pts.push_back(std::move(p));
        std::size_t i = 0;
        while (i < n && ++k[i] == degrees[i])
            k[i++] = 0;
        if (i == n)
            break;
    }
    return pts;
}

std::vector<PathOutcome> track_all(const Homotopy& hom, const std::vector<CVector>& starts,
                                   const std::vector<std::size_t>& which, const TrackerConfig& cfg)
{
    std::vector<PathOutcome> out(which.size());
    auto work = [&](std::size_t j) { out[j] = track(hom, starts[which[j]], cfg); };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (!cfg.parallel || hw == 1 || which.size() < 2) {
        for (std::size_t j = 0; j < which.size(); ++j)
            work(j);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(hw, which.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t j = next++; j < which.size(); j = next++)
                work(j);
        });
    pool.clear();
    return out;
}

bool same_point(const CVector& a, const CVector& b, double radius)
{
    return inf_norm(a - b) <= radius * std::max(1.0, std::max(inf_norm(a), inf_norm(b)));
}

}  // namespace

SolutionSet solve_square(const MultiPolySystem& system, const TrackerConfig& cfg, std::uint64_t seed)
{
    cfg.validate();
    if (static_cast<int>(system.size()) != system.nvars() || system.nvars() == 0)
        throw DimensionError("solve_square needs as many polynomials as variables");
    const auto degrees = system.degrees();
    for (int d : degrees)
        if (d < 1)
            throw DimensionError("every polynomial must have degree >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const Complex gamma = std::polar(1.0, angle(rng));
    const Homotopy hom(system, gamma);

    const auto starts = start_points(degrees);
    std::vector<std::size_t> all(starts.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    auto outcomes = track_all(hom, starts, all, cfg);

    // Colliding endpoints of a generic system usually mean a path jumped;
    // re-track the members of every collision with a finer step.
    std::vector<std::size_t> suspects;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].status != PathStatus::converged)
            continue;
        for (std::size_t j = 0; j < outcomes.size(); ++j)
            if (j != i && outcomes[j].status == PathStatus::converged &&
                same_point(outcomes[i].x, outcomes[j].x, cfg.dedup_radius)) {
                suspects.push_back(i);
                break;
            }
    }
    if (!suspects.empty()) {
        TrackerConfig fine = cfg;
        fine.initial_step = cfg.initial_step / 8.0;
        fine.min_step = std::min(cfg.min_step, fine.initial_step / 10.0);
        auto again = track_all(hom, starts, suspects, fine);
        for (std::size_t j = 0; j < suspects.size(); ++j)
            if (again[j].status == PathStatus::converged)
                outcomes[suspects[j]] = again[j];
    }

    SolutionSet sol;
    sol.paths_tracked = static_cast<int>(starts.size());
    for (const auto& o : outcomes) {
        switch (o.status) {
        case PathStatus::failed:
            ++sol.path_failures;
            if (o.s > 0.9)
                sol.nonisolated_warning = true;
            continue;
        case PathStatus::diverged:
            ++sol.diverged;
            continue;
        case PathStatus::converged:
            break;
        }
        bool dup = false;
        for (const auto& p : sol.points)
            if (same_point(p, o.x, cfg.dedup_radius)) {
                dup = true;
                break;
            }
        if (dup) {
            ++sol.duplicates_merged;
            sol.nonisolated_warning = true;
            continue;
        }
        sol.points.push_back(o.x);
        sol.residuals.push_back(o.residual);
    }
    return sol;
}

SolutionSet solve_projective(const MultiPolySystem& system, const CVector& chart, const TrackerConfig& cfg,
                             std::uint64_t seed)
{
    const int n = system.nvars();
    if (chart.size() != n)
        throw DimensionError("chart covector length must equal the variable count");
    if (!system.is_homogeneous())
        throw DimensionError("solve_projective needs homogeneous forms");
    if (static_cast<int>(system.size()) < n - 1)
        throw DimensionError("fewer than N-1 forms: the zero set is not finite");

    const MultiPoly chart_form = MultiPoly::linear(chart);
    std::vector<MultiPoly> square;
    if (static_cast<int>(system.size()) == n - 1) {
        square = system.polys();
    } else {
        int dmax = 0;
        for (int d : system.degrees())
            dmax = std::max(dmax, d);
        std::vector<MultiPoly> lifted;
        for (const auto& p : system.polys())
            lifted.push_back(p.is_zero() ? p : p * chart_form.pow(dmax - p.degree()));
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int r = 0; r < n - 1; ++r) {
            MultiPoly comb(n);
            for (const auto& p : lifted)
                comb = comb + p.scaled(Complex(normal(rng), normal(rng)));
            square.push_back(comb);
        }
    }
    square.push_back(chart_form - MultiPoly::constant(n, 1.0));

    const SolutionSet affine = solve_square(MultiPolySystem(n, square), cfg, seed);

    SolutionSet out;
    out.paths_tracked = affine.paths_tracked;
    out.path_failures = affine.path_failures;
    out.diverged = affine.diverged;
    out.duplicates_merged = affine.duplicates_merged;
    out.nonisolated_warning = affine.nonisolated_warning;
    for (const auto& p : affine.points) {
        CVector x = p;
        const double res = system.relative_residual(x);
        if (res > kProjectiveAcceptTol) {
            ++out.rejected;
            continue;
        }
        const CVector rep = canonical_representative(x);
        bool dup = false;
        for (const auto& q : out.points)
            if (projective_distance(q, rep) <= cfg.dedup_radius) {
                dup = true;
                break;
            }
        if (dup) {
            ++out.duplicates_merged;
            continue;
        }
        out.points.push_back(rep);
        out.residuals.push_back(system.relative_residual(rep));
    }
    return out;
}

}  // namespace tenspec
