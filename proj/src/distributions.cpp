#include "divmeas/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "divmeas/errors.hpp"
#include "divmeas/quadrature.hpp"

namespace divmeas {

namespace {
constexpr double pi = std::numbers::pi;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw validation_error(std::string(name) + " must be positive and finite");
}
}  // namespace

Gaussian::Gaussian(double mean_, double sigma_) : mean(mean_), sigma(sigma_) {
    if (!std::isfinite(mean)) throw validation_error("Gaussian mean must be finite");
    require_positive(sigma, "Gaussian sigma");
}

Cauchy::Cauchy(double x0_, double gamma_) : x0(x0_), gamma(gamma_) {
    if (!std::isfinite(x0)) throw validation_error("Cauchy x0 must be finite");
    require_positive(gamma, "Cauchy gamma");
}

LogNormal::LogNormal(double nu_, double sigma_) : nu(nu_), sigma(sigma_) {
    if (!std::isfinite(nu)) throw validation_error("LogNormal nu must be finite");
    require_positive(sigma, "LogNormal sigma");
}

double pdf(const AnalyticDistribution& dist, double x) {
    return std::visit(
        [x](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                const double z = (x - d.mean) / d.sigma;
                return std::exp(-0.5 * z * z) / (d.sigma * std::sqrt(2.0 * pi));
            } else if constexpr (std::is_same_v<T, Cauchy>) {
                const double z = (x - d.x0) / d.gamma;
                return 1.0 / (pi * d.gamma * (1.0 + z * z));
            } else {
                if (x <= 0.0) return 0.0;
                const double mu = d.nu - 0.5 * d.sigma * d.sigma;
                const double z = (std::log(x) - mu) / d.sigma;
                return std::exp(-0.5 * z * z) / (x * d.sigma * std::sqrt(2.0 * pi));
            }
        },
        dist);
}

DensityGrid::DensityGrid(std::vector<double> abscissae, std::vector<double> densities)
    : abscissae_(std::move(abscissae)), densities_(std::move(densities)) {
    if (abscissae_.size() != densities_.size())
        throw validation_error("DensityGrid: abscissae/density length mismatch");
    if (abscissae_.size() < min_points)
        throw validation_error("DensityGrid: need at least " +
                               std::to_string(min_points) + " points");
    for (std::size_t i = 1; i < abscissae_.size(); ++i)
        if (!(abscissae_[i] > abscissae_[i - 1]))
            throw validation_error("DensityGrid: abscissae must be strictly increasing");
    for (std::size_t i = 0; i < densities_.size(); ++i)
        if (!(densities_[i] >= 0.0) || !std::isfinite(densities_[i]))
            throw validation_error("DensityGrid: density at index " + std::to_string(i) +
                                   " is negative or not finite");
    const double mass = quad::trapezoid(abscissae_, densities_);
    if (std::abs(mass - 1.0) > norm_tolerance)
        throw validation_error("DensityGrid: density integrates to " +
                               std::to_string(mass) + ", outside 1 +- 1e-3");
    for (double& d : densities_) d /= mass;
}

namespace {

DensityGrid tabulate_on(const AnalyticDistribution& dist, double lo, double hi,
                        std::size_t points, bool log_space) {
    std::vector<double> x(points), p(points);
    const double h = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = lo + h * static_cast<double>(i);
        x[i] = log_space ? std::exp(t) : t;
        p[i] = pdf(dist, x[i]);
    }
    return DensityGrid(std::move(x), std::move(p));
}

}  // namespace

DensityGrid tabulate(const AnalyticDistribution& dist, std::size_t points) {
    if (points < DensityGrid::min_points)
        throw validation_error("tabulate: too few points");
    return std::visit(
        [&](const auto& d) -> DensityGrid {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return tabulate_on(dist, d.mean - 10.0 * d.sigma, d.mean + 10.0 * d.sigma,
                                   points, false);
            } else if constexpr (std::is_same_v<T, Cauchy>) {
                return tabulate_on(dist, d.x0 - 1e4 * d.gamma, d.x0 + 1e4 * d.gamma,
                                   points, false);
            } else {
                const double mu = d.nu - 0.5 * d.sigma * d.sigma;
                return tabulate_on(dist, mu - 10.0 * d.sigma, mu + 10.0 * d.sigma, points,
                                   true);
            }
        },
        dist);
}

DensityGrid tabulate(const AnalyticDistribution& dist) {
    return std::visit(
        [&](const auto& d) -> DensityGrid {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return tabulate(dist, 4001);
            } else if constexpr (std::is_same_v<T, Cauchy>) {
                // Wide window so the truncated mass stays inside the
                // DensityGrid normalization gate; dense so the center
                // (scale gamma) is resolved.
                return tabulate(dist, 2000001);
            } else {
                return tabulate(dist, 40001);
            }
        },
        dist);
}

double cauchy_truncation_correction(const Cauchy& c, double half_width) {
    const double t = half_width / c.gamma;
    if (!(t >= 10.0))
        throw validation_error("cauchy_truncation_correction: window narrower than 10 gamma");
    const double s = std::atan(1.0 / t);  // pi/2 - atan(t)
    // integral of log(sin u) on [0, s], via log(sin u) = log u + log(sinc u)
    const double s2 = s * s;
    const double log_sin_int =
        s * (std::log(s) - 1.0) - s * s2 / 18.0 - s2 * s2 * s / 900.0;
    const double eps = 2.0 * s / pi;  // mass outside the window
    const double d_true = -std::log(4.0 * pi * c.gamma);
    // tail contribution to the untruncated integral of p log p
    const double tail =
        (4.0 / pi) * log_sin_int - eps * std::log(pi * c.gamma);
    const double interior = d_true - tail;
    const double grid_limit = interior / (1.0 - eps) - std::log1p(-eps);
    return d_true - grid_limit;
}

}  // namespace divmeas
