#pragma once

#include <cstdint>
#include <vector>

#include "tenspec/multipoly.hpp"

namespace tenspec {

struct TrackerConfig {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double corrector_tol = 1e-10;
    int max_corrections = 3;
    double polish_tol = 1e-12;
    double dedup_radius = 1e-6;
    /// Paths whose iterate exceeds this norm are treated as going to infinity.
    double divergence_bound = 1e8;
    bool parallel = false;

    void validate() const;
};

/**
 * Endpoints of a homotopy run with exact path bookkeeping:
 * paths_tracked = points + path_failures + diverged + duplicates_merged
 * (+ rejected for projective solves).
 */
struct SolutionSet {
    std::vector<CVector> points;
    std::vector<double> residuals;  // ||F(x)||_inf / scale(x)
    int paths_tracked = 0;
    int path_failures = 0;
    int diverged = 0;
    int duplicates_merged = 0;
    int rejected = 0;
    bool nonisolated_warning = false;
};

/**
 * All isolated solutions of a square system by total-degree homotopy
 * H(x, s) = (1 - s) gamma G(x) + s F(x), G_i = x_i^{d_i} - 1, gamma a seeded
 * random unit complex number. Euler predictor, Newton corrector; colliding
 * endpoints are re-tracked once with a finer step before being merged.
 */
SolutionSet solve_square(const MultiPolySystem& system, const TrackerConfig& cfg = {}, std::uint64_t seed = 42);

/**
 * Projective zeros of a homogeneous system in N variables. Uses N-1 random
 * combinations of the forms (or the forms themselves when there are exactly
 * N-1) plus the affine chart chart . x = 1, then keeps the endpoints that
 * satisfy the full system to 1e-8 relative. Points are canonical
 * representatives. Combinations of forms of unequal degree lift the lower
 * ones by powers of the chart form.
 */
SolutionSet solve_projective(const MultiPolySystem& system, const CVector& chart, const TrackerConfig& cfg = {},
                             std::uint64_t seed = 42);

/// Relative residual accepted by solve_projective on the original system.
inline constexpr double kProjectiveAcceptTol = 1e-8;

}  // namespace tenspec
