#include "divmeas/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "divmeas/errors.hpp"
#include "divmeas/quadrature.hpp"

namespace divmeas {

BenefitResult diversification_benefit(const DensityGrid& underlying,
                                      const FutureDeltaFn& delta, double cap) {
    const auto x = underlying.abscissae();
    const auto p = underlying.densities();
    std::vector<double> integrand(x.size());
    bool hit_zero = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = delta.delta(x[i]);
        if (delta.increasing && d < 0.0)
            throw domain_error("diversification_benefit: delta = " + std::to_string(d) +
                               " < 0 at a = " + std::to_string(x[i]) +
                               " on a map declared increasing");
        const double mag = std::abs(d);
        if (mag == 0.0) {
            // flat segment; infinite contribution wherever p > 0
            if (p[i] > 0.0) hit_zero = true;
            integrand[i] = 0.0;
            continue;
        }
        integrand[i] = -p[i] * std::log(mag);
    }
    BenefitResult r;
    r.nats = quad::integrate(x, integrand);
    r.diverged = hit_zero || r.nats > cap;
    return r;
}

BenefitResult diversification_benefit(const AnalyticDistribution& underlying,
                                      const FutureDeltaFn& delta, double cap) {
    return diversification_benefit(tabulate(underlying), delta, cap);
}

double gearing_benefit(double lambda) {
    if (!(lambda > 0.0))
        throw validation_error("gearing_benefit: lambda must be positive");
    return -std::log(lambda);
}

DensityGrid transform_density(const DensityGrid& underlying, const MonotoneMap& map) {
    const auto x = underlying.abscissae();
    const auto p = underlying.densities();
    std::vector<double> c(x.size()), q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c[i] = map.value(x[i]);
        const double slope = map.slope(x[i]);
        if (slope == 0.0 || !std::isfinite(slope))
            throw validation_error("transform_density: zero or non-finite slope at a = " +
                                   std::to_string(x[i]));
        q[i] = p[i] / std::abs(slope);
    }
    const bool decreasing = c.back() < c.front();
    if (decreasing) {
        std::reverse(c.begin(), c.end());
        std::reverse(q.begin(), q.end());
    }
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!(c[i] > c[i - 1]))
            throw validation_error("transform_density: sampled map is not strictly monotone");
    return DensityGrid(std::move(c), std::move(q));
}

}  // namespace divmeas
