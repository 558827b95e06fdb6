#ifndef DIVMEAS_ENTROPY_HPP
#define DIVMEAS_ENTROPY_HPP

#include "divmeas/distributions.hpp"

namespace divmeas {

enum class Unit { nats, bits };

// Diversification value D = integral of p log p (negative differential
// entropy).  More peaked densities score higher.
struct Diversification {
    double value;
    Unit unit;

    double nats() const;
    double bits() const;
    Diversification in(Unit target) const;
};

// Closed-form D for the supported analytic families.
Diversification d_measure_analytic(const AnalyticDistribution& dist,
                                   Unit unit = Unit::nats);

// Quadrature D over a tabulated density; 0 log 0 counts as 0.
Diversification d_measure_grid(const DensityGrid& grid, Unit unit = Unit::nats);

// D of the portfolio c = wA*a + wB*b for independent Gaussians a, b.
// dA fixes the reporting unit and is the single-asset baseline the
// combination is compared against in tests.
Diversification combine_gaussian_pair(const Diversification& dA, double sigma_a,
                                      double sigma_b, double w_a, double w_b);

// Number of equal-variance independent Gaussian assets, each at j bits,
// whose equal-weight mixture reaches k bits: n = 2^(2(k-j)).
double equivalent_asset_count(double k_bits, double j_bits);

}  // namespace divmeas

#endif
