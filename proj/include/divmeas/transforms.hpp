#ifndef DIVMEAS_TRANSFORMS_HPP
#define DIVMEAS_TRANSFORMS_HPP

#include <functional>

#include "divmeas/distributions.hpp"

namespace divmeas {

// Slope of the combined portfolio value with respect to the underlying
// final value ("future delta").  Must be reentrant; sign declared up
// front so a wrong-signed sample is a hard error.
struct FutureDeltaFn {
    std::function<double(double)> delta;
    bool increasing = true;
};

// Strictly monotone map of the underlying value together with its
// derivative.
struct MonotoneMap {
    std::function<double(double)> value;
    std::function<double(double)> slope;
};

// Additive change in D under the map, in nats; `diverged` is set when
// the integral exceeds the cap (flat-payoff regions of positive
// probability).
struct BenefitResult {
    double nats = 0.0;
    bool diverged = false;
};

inline constexpr double default_divergence_cap = 700.0;

// -integral p(a) log|Delta(a)| da over the tabulated density, so that
// D(transformed) = D(underlying) + benefit.
BenefitResult diversification_benefit(const DensityGrid& underlying,
                                      const FutureDeltaFn& delta,
                                      double cap = default_divergence_cap);

BenefitResult diversification_benefit(const AnalyticDistribution& underlying,
                                      const FutureDeltaFn& delta,
                                      double cap = default_divergence_cap);

// Benefit of constant gearing c = lambda * a: -log(lambda).
double gearing_benefit(double lambda);

// Pushforward density under a strictly monotone map, tabulated on the
// image of the input abscissae.  Independent oracle for the benefit
// integral.
DensityGrid transform_density(const DensityGrid& underlying, const MonotoneMap& map);

}  // namespace divmeas

#endif
