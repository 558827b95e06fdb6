#include "divmeas/entropy.hpp"

#include <cmath>
#include <numbers>

#include "divmeas/errors.hpp"
#include "divmeas/quadrature.hpp"

namespace divmeas {

namespace {
constexpr double pi = std::numbers::pi;
const double ln2 = std::log(2.0);
}  // namespace

double Diversification::nats() const {
    return unit == Unit::nats ? value : value * ln2;
}

double Diversification::bits() const {
    return unit == Unit::bits ? value : value / ln2;
}

Diversification Diversification::in(Unit target) const {
    if (target == unit) return *this;
    return {target == Unit::nats ? nats() : bits(), target};
}

Diversification d_measure_analytic(const AnalyticDistribution& dist, Unit unit) {
    const double nats = std::visit(
        [](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                return -0.5 * std::log(2.0 * pi * std::numbers::e * d.sigma * d.sigma);
            } else if constexpr (std::is_same_v<T, Cauchy>) {
                return -std::log(4.0 * pi * d.gamma);
            } else {
                return -0.5 - 0.5 * std::log(2.0 * pi * d.sigma * d.sigma) - d.nu +
                       0.5 * d.sigma * d.sigma;
            }
        },
        dist);
    return Diversification{nats, Unit::nats}.in(unit);
}

Diversification d_measure_grid(const DensityGrid& grid, Unit unit) {
    const auto x = grid.abscissae();
    const auto p = grid.densities();
    std::vector<double> integrand(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        integrand[i] = p[i] > 0.0 ? p[i] * std::log(p[i]) : 0.0;
    const double nats = quad::integrate(x, integrand);
    return Diversification{nats, Unit::nats}.in(unit);
}

Diversification combine_gaussian_pair(const Diversification& dA, double sigma_a,
                                      double sigma_b, double w_a, double w_b) {
    if (!(sigma_a > 0.0) || !(sigma_b > 0.0))
        throw validation_error("combine_gaussian_pair: sigmas must be positive");
    const double var_c = w_a * w_a * sigma_a * sigma_a + w_b * w_b * sigma_b * sigma_b;
    if (!(var_c > 0.0))
        throw validation_error("combine_gaussian_pair: combined variance is zero");
    return d_measure_analytic(Gaussian(0.0, std::sqrt(var_c)), dA.unit);
}

double equivalent_asset_count(double k_bits, double j_bits) {
    if (k_bits < j_bits)
        throw validation_error("equivalent_asset_count: k must be >= j");
    return std::exp2(2.0 * (k_bits - j_bits));
}

}  // namespace divmeas
