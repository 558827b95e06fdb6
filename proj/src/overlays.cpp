#include "divmeas/overlays.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "divmeas/errors.hpp"
#include "divmeas/quadrature.hpp"

namespace divmeas {

namespace {

void require_zero_yield(const bs::MarketParams& m) {
    if (m.q != 0.0)
        throw validation_error("overlay benefit: dividend yield must be zero");
}

// -int p(a) log Delta(a) da evaluated in log-space, where the density
// is a plain normal and Simpson converges fast.
BenefitResult integrate_benefit(const LogNormal& dist,
                                const std::function<double(double)>& delta_of_a,
                                double cap) {
    const double s = dist.sigma;
    const double mu = dist.nu - 0.5 * s * s;
    const double norm = 1.0 / (s * std::sqrt(2.0 * std::numbers::pi));
    bool hit_zero = false;
    auto f = [&](double y) {
        const double z = (y - mu) / s;
        const double weight = norm * std::exp(-0.5 * z * z);
        const double delta = delta_of_a(std::exp(y));
        if (delta <= 0.0) {
            hit_zero = true;
            return 0.0;
        }
        return -weight * std::log(delta);
    };
    BenefitResult r;
    r.nats = quad::adaptive_simpson(f, mu - 10.0 * s, mu + 10.0 * s, 1e-8);
    r.diverged = hit_zero || r.nats > cap;
    return r;
}

}  // namespace

UnderlyingModel::UnderlyingModel(double nu_, double sigma_annual_, double horizon_years_)
    : nu(nu_), sigma_annual(sigma_annual_), horizon_years(horizon_years_) {
    if (!(sigma_annual > 0.0))
        throw validation_error("UnderlyingModel: sigma must be positive");
    if (!(horizon_years > 0.0))
        throw validation_error("UnderlyingModel: horizon must be positive");
}

LogNormal UnderlyingModel::at_horizon() const {
    return LogNormal(nu, sigma_annual * std::sqrt(horizon_years));
}

BenefitResult benefit_long_put(const UnderlyingModel& u, const bs::MarketParams& m,
                               double strike, double cap) {
    require_zero_yield(m);
    if (!(strike > 0.0)) throw validation_error("benefit_long_put: strike must be positive");
    return integrate_benefit(
        u.at_horizon(), [&](double a) { return bs::future_delta_long_put(a, strike, m); },
        cap);
}

BenefitResult benefit_put_spread(const UnderlyingModel& u, const bs::MarketParams& m,
                                 double upper_strike, double lower_strike, double cap) {
    require_zero_yield(m);
    if (!(upper_strike > lower_strike) || !(lower_strike > 0.0))
        throw validation_error("benefit_put_spread: need upper > lower > 0");
    return integrate_benefit(
        u.at_horizon(),
        [&](double a) {
            return bs::future_delta_put_spread(a, upper_strike, lower_strike, m);
        },
        cap);
}

BenefitResult benefit_collar(const UnderlyingModel& u, const bs::MarketParams& m,
                             double put_strike, double call_strike, double gap_threshold,
                             double cap) {
    require_zero_yield(m);
    if (!(call_strike > put_strike) || !(put_strike > 0.0))
        throw validation_error("benefit_collar: need call strike > put strike > 0");
    BenefitResult r = integrate_benefit(
        u.at_horizon(),
        [&](double a) { return bs::future_delta_collar(a, put_strike, call_strike, m); },
        cap);
    if (call_strike - put_strike < gap_threshold) r.diverged = true;
    return r;
}

std::vector<BenefitPoint> sweep_figure(FigureSweep which,
                                       std::span<const double> strikes_pct,
                                       std::span<const double> sigmas,
                                       const SweepConfig& cfg) {
    if (strikes_pct.empty() || sigmas.empty())
        throw validation_error("sweep_figure: empty strike or sigma grid");
    if (!(cfg.term_years > cfg.horizon_years))
        throw validation_error("sweep_figure: option term must exceed the horizon");
    const double tau = cfg.term_years - cfg.horizon_years;

    std::vector<double> sigma_sorted(sigmas.begin(), sigmas.end());
    std::sort(sigma_sorted.begin(), sigma_sorted.end());
    std::vector<double> strike_sorted(strikes_pct.begin(), strikes_pct.end());
    std::sort(strike_sorted.begin(), strike_sorted.end());

    std::vector<BenefitPoint> rows;
    rows.reserve(sigma_sorted.size() * strike_sorted.size());
    for (double sigma : sigma_sorted) {
        const UnderlyingModel u(cfg.nu, sigma, cfg.horizon_years);
        const bs::MarketParams m(cfg.r, 0.0, sigma, tau);
        for (double pct : strike_sorted) {
            const double strike = pct / 100.0;
            BenefitResult b;
            switch (which) {
                case FigureSweep::fig2:
                    b = benefit_long_put(u, m, strike);
                    break;
                case FigureSweep::fig3:
                    b = benefit_put_spread(u, m, strike, strike - cfg.spread_width);
                    break;
                case FigureSweep::fig4:
                    b = benefit_collar(u, m, cfg.collar_put, strike, cfg.gap_threshold);
                    break;
            }
            rows.push_back({pct, sigma, b.nats, b.diverged});
        }
    }
    return rows;
}

}  // namespace divmeas
