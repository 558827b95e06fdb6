#include "divmeas/maxent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "divmeas/errors.hpp"
#include "divmeas/quadrature.hpp"

namespace divmeas {

namespace {

using Lambda = std::array<double, 4>;

// Quartic coefficient must stay negative for a normalizable density;
// the Gaussian point (l3 = l4 = 0, l2 < 0) is the one admissible
// boundary case.
bool normalizable(const Lambda& l) {
    if (l[3] < 0.0) return true;
    return l[3] == 0.0 && l[2] == 0.0 && l[1] < 0.0;
}

struct Evaluation {
    double log_z = 0.0;
    std::array<double, 8> moments{};  // E[x^k], k = 1..8
    double boundary_ratio = 0.0;      // max boundary density / peak density
    double dual = 0.0;                // logZ - lambda . targets
};

Evaluation evaluate(const Lambda& l, const std::array<double, 4>& targets,
                    double half_width, std::size_t points) {
    const double h = 2.0 * half_width / static_cast<double>(points - 1);
    std::vector<double> s(points), x(points);
    double s_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points; ++i) {
        const double xi = -half_width + h * static_cast<double>(i);
        x[i] = xi;
        const double x2 = xi * xi;
        s[i] = l[0] * xi + l[1] * x2 + l[2] * x2 * xi + l[3] * x2 * x2;
        s_max = std::max(s_max, s[i]);
    }
    std::vector<double> u(points);
    for (std::size_t i = 0; i < points; ++i) u[i] = std::exp(s[i] - s_max);
    const double z_tilde = quad::simpson_uniform(u, h);

    Evaluation e;
    e.log_z = s_max + std::log(z_tilde);
    e.boundary_ratio = std::max(u.front(), u.back());  // peak of u is 1

    std::vector<double> integrand(points);
    std::vector<double> xpow(u);  // running x^k * u
    for (int k = 0; k < 8; ++k) {
        for (std::size_t i = 0; i < points; ++i) xpow[i] *= x[i];
        e.moments[static_cast<std::size_t>(k)] =
            quad::simpson_uniform(xpow, h) / z_tilde;
    }
    e.dual = e.log_z;
    for (int k = 0; k < 4; ++k) e.dual -= l[static_cast<std::size_t>(k)] * targets[static_cast<std::size_t>(k)];
    return e;
}

}  // namespace

bool MomentTargets::feasible() const {
    return variance > 0.0 && kurtosis > 1.0 + skewness * skewness;
}

MaxEntSolution solve_maxent(const MomentTargets& targets, const MaxEntOptions& opts) {
    if (!targets.feasible())
        throw infeasible_error(
            "solve_maxent: targets violate variance > 0 or kurt > 1 + skew^2");

    // Standardized problem: unit variance, zero mean.
    const std::array<double, 4> t = {0.0, 1.0, targets.skewness, targets.kurtosis};
    const double sigma = std::sqrt(targets.variance);

    Lambda l = {0.0, -0.5, 0.0, 0.0};
    double width = opts.support_sigmas;
    std::size_t points = opts.points | 1;
    auto scaled_points = [&](double w) {
        const auto p = static_cast<std::size_t>(
            std::ceil(static_cast<double>(opts.points) * w / opts.support_sigmas));
        return p | 1;
    };

    Evaluation e = evaluate(l, t, width, points);
    MaxEntSolution sol;
    bool converged = false;

    // Newton runs on the support-truncated family, which is normalizable
    // for any multipliers; iterates may pass through lambda4 > 0 on the
    // way to the solution.  Widening only makes sense while the exact
    // tails decay, and a solution only counts once the boundary density
    // is negligible with lambda4 on the normalizable side.
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        sol.iterations = iter + 1;

        if (normalizable(l)) {
            while (e.boundary_ratio > 1e-14 && width < opts.max_support_sigmas) {
                width *= 2.0;
                points = scaled_points(width);
                e = evaluate(l, t, width, points);
            }
        }

        Eigen::Vector4d residual;
        for (int k = 0; k < 4; ++k)
            residual(k) = e.moments[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(k)];
        sol.residual = residual.cwiseAbs().maxCoeff();
        if (sol.residual < opts.tolerance) {
            if (normalizable(l) && e.boundary_ratio <= 1e-10) {
                converged = true;
                break;
            }
            if (!normalizable(l) || width >= opts.max_support_sigmas)
                break;  // the truncated optimum is an artifact of the window
        }

        Eigen::Matrix4d jac;  // covariance of the sufficient statistics
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                jac(j - 1, k - 1) = e.moments[static_cast<std::size_t>(j + k - 1)] -
                                    e.moments[static_cast<std::size_t>(j - 1)] *
                                        e.moments[static_cast<std::size_t>(k - 1)];
        const Eigen::Vector4d step = jac.fullPivLu().solve(-residual);
        if (!step.allFinite()) break;

        // Backtrack on the convex dual of the truncated problem.
        double alpha = 1.0;
        bool accepted = false;
        while (alpha >= 1e-12) {
            Lambda cand;
            for (int k = 0; k < 4; ++k)
                cand[static_cast<std::size_t>(k)] =
                    l[static_cast<std::size_t>(k)] + alpha * step(k);
            const Evaluation ce = evaluate(cand, t, width, points);
            if (std::isfinite(ce.dual) && ce.dual < e.dual + 1e-14) {
                l = cand;
                e = ce;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;
    }

    sol.converged = converged;
    sol.entropy_nats = e.log_z;
    for (int k = 0; k < 4; ++k)
        sol.entropy_nats -= l[static_cast<std::size_t>(k)] * e.moments[static_cast<std::size_t>(k)];
    sol.entropy_nats += std::log(sigma);  // un-standardize

    double scale = sigma;
    for (int k = 0; k < 4; ++k) {
        sol.lagrange_multipliers[static_cast<std::size_t>(k)] =
            l[static_cast<std::size_t>(k)] / scale;
        scale *= sigma;
    }
    sol.log_normalizer = e.log_z + std::log(sigma);

    const double m1 = e.moments[0], m2 = e.moments[1], m3 = e.moments[2],
                 m4 = e.moments[3];
    const double c2 = m2 - m1 * m1;
    const double c3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    const double c4 =
        m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    sol.achieved_moments = {c2 * sigma * sigma, c3 / std::pow(c2, 1.5),
                            c4 / (c2 * c2)};
    return sol;
}

std::vector<SurfacePoint> d_difference_surface(double variance,
                                               std::span<const double> skew_grid,
                                               std::span<const double> kurt_grid,
                                               const MaxEntOptions& opts) {
    if (!(variance > 0.0))
        throw validation_error("d_difference_surface: variance must be positive");
    const double gaussian_entropy =
        0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
    std::vector<SurfacePoint> rows;
    rows.reserve(skew_grid.size() * kurt_grid.size());
    for (double skew : skew_grid) {
        for (double kurt : kurt_grid) {
            const MomentTargets t{variance, skew, kurt};
            SurfacePoint p{skew, kurt, 0.0, false};
            if (t.feasible()) {
                const MaxEntSolution sol = solve_maxent(t, opts);
                if (sol.converged) {
                    p.defined = true;
                    p.delta_d_nats = gaussian_entropy - sol.entropy_nats;
                }
            }
            rows.push_back(p);
        }
    }
    return rows;
}

}  // namespace divmeas
