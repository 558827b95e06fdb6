#ifndef DIVMEAS_OVERLAYS_HPP
#define DIVMEAS_OVERLAYS_HPP

#include <span>
#include <vector>

#include "divmeas/black_scholes.hpp"
#include "divmeas/distributions.hpp"
#include "divmeas/transforms.hpp"

namespace divmeas {

// Log-normal underlying for the overlay examples.  Values are in units
// of the initial asset value; nu is the log of the expected growth
// factor over the horizon.
struct UnderlyingModel {
    double nu;
    double sigma_annual;
    double horizon_years;
    UnderlyingModel(double nu_, double sigma_annual_, double horizon_years_ = 1.0);

    LogNormal at_horizon() const;
};

// Benefit integrals -int p(a) log Delta(a) da over the horizon density.
// The dividend yield must be zero (the delta formulas keep the general
// term, the worked examples do not).
BenefitResult benefit_long_put(const UnderlyingModel& u, const bs::MarketParams& m,
                               double strike, double cap = default_divergence_cap);

BenefitResult benefit_put_spread(const UnderlyingModel& u, const bs::MarketParams& m,
                                 double upper_strike, double lower_strike,
                                 double cap = default_divergence_cap);

// Diverges as the call strike approaches the put strike; rows with a
// strike gap below gap_threshold (fraction of initial value) are
// flagged as diverged up front.
BenefitResult benefit_collar(const UnderlyingModel& u, const bs::MarketParams& m,
                             double put_strike, double call_strike,
                             double gap_threshold = 0.001,
                             double cap = default_divergence_cap);

struct BenefitPoint {
    double strike_pct;
    double sigma;
    double nats;
    bool diverged;
};

enum class FigureSweep { fig2, fig3, fig4 };

struct SweepConfig {
    double r = 0.10;
    double nu = 0.10;
    double horizon_years = 1.0;
    double term_years = 2.0;
    double spread_width = 0.10;  // upper minus lower put strike
    double collar_put = 1.0;     // put strike as fraction of initial value
    double gap_threshold = 0.001;
};

// Benefit curves for the long-put / put-spread / collar sweeps.  The
// strike axis is in percent of the initial asset value: the put strike
// for fig2, the upper put strike for fig3, the call strike for fig4.
// Output is sorted by (sigma, strike).
std::vector<BenefitPoint> sweep_figure(FigureSweep which,
                                       std::span<const double> strikes_pct,
                                       std::span<const double> sigmas,
                                       const SweepConfig& cfg = {});

}  // namespace divmeas

#endif
