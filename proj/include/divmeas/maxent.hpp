#ifndef DIVMEAS_MAXENT_HPP
#define DIVMEAS_MAXENT_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace divmeas {

// Zero-mean moment targets in standardized units: skewness and kurtosis
// are the third and fourth standardized moments (raw kurtosis, normal = 3).
struct MomentTargets {
    double variance;
    double skewness;
    double kurtosis;

    // kurt > 1 + skew^2 holds for every distribution.
    bool feasible() const;
};

// Density exp(l1 x + l2 x^2 + l3 x^3 + l4 x^4 - logZ) matching the
// targets.  Multipliers and log_normalizer are in the original
// (un-standardized) variable.
struct MaxEntSolution {
    std::array<double, 4> lagrange_multipliers{};
    double log_normalizer = 0.0;
    bool converged = false;
    MomentTargets achieved_moments{};
    double entropy_nats = 0.0;
    int iterations = 0;
    double residual = 0.0;  // max moment mismatch, standardized units
};

struct MaxEntOptions {
    int max_iterations = 200;
    double tolerance = 1e-9;        // residual gate, standardized moments
    std::size_t points = 4001;      // Simpson points at the base support
    double support_sigmas = 12.0;   // half-width, standardized units
    double max_support_sigmas = 96.0;
};

// Damped Newton on the moment-matching equations, using the convex dual
// logZ - lambda.t as merit function.  Targets with no normalizable
// quartic solution (kurtosis above the skew-dependent ceiling) come
// back with converged = false.
MaxEntSolution solve_maxent(const MomentTargets& targets, const MaxEntOptions& opts = {});

struct SurfacePoint {
    double skew;
    double kurt;
    double delta_d_nats;  // D(maxent) - D(normal, same variance), >= 0 when defined
    bool defined;
};

// Fig.-5-style surface; infeasible or non-converged points are flagged
// undefined and reported as zero.
std::vector<SurfacePoint> d_difference_surface(double variance,
                                               std::span<const double> skew_grid,
                                               std::span<const double> kurt_grid,
                                               const MaxEntOptions& opts = {});

}  // namespace divmeas

#endif
