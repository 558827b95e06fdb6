#include "divmeas/black_scholes.hpp"

#include <cmath>
#include <numbers>

#include "divmeas/errors.hpp"

namespace divmeas::bs {

namespace {
const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

void require_positive_strike(double a, double E) {
    if (!(a > 0.0)) throw validation_error("black_scholes: spot must be positive");
    if (!(E > 0.0)) throw validation_error("black_scholes: strike must be positive");
}

// N(x) - N(y) for x >= y, evaluated on the tail where both erfc values
// are small so the difference does not cancel.
double cdf_difference(double x, double y) {
    if (x + y > 0.0) return 0.5 * (std::erfc(y * inv_sqrt2) - std::erfc(x * inv_sqrt2));
    return 0.5 * (std::erfc(-x * inv_sqrt2) - std::erfc(-y * inv_sqrt2));
}

}  // namespace

MarketParams::MarketParams(double r_, double q_, double sigma_, double tau_)
    : r(r_), q(q_), sigma(sigma_), tau(tau_) {
    if (!std::isfinite(r) || !std::isfinite(q))
        throw validation_error("MarketParams: r and q must be finite");
    if (!(sigma > 0.0)) throw validation_error("MarketParams: sigma must be positive");
    if (!(tau > 0.0)) throw validation_error("MarketParams: tau must be positive");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x * inv_sqrt2); }

double d1(double a, double E, const MarketParams& m) {
    require_positive_strike(a, E);
    return (std::log(a / E) + (m.r - m.q + 0.5 * m.sigma * m.sigma) * m.tau) /
           (m.sigma * std::sqrt(m.tau));
}

double future_delta_long_put(double a, double E, const MarketParams& m) {
    // e^{-q tau} [N(d1) - 1] + 1 rearranged so a tiny N(d1) survives the
    // subtraction from 1 (q = 0 reduces to N(d1) exactly).
    return std::exp(-m.q * m.tau) * norm_cdf(d1(a, E, m)) - std::expm1(-m.q * m.tau);
}

double future_delta_put_spread(double a, double Eu, double El, const MarketParams& m) {
    if (!(Eu > El)) throw validation_error("put spread: upper strike must exceed lower");
    const double du = d1(a, Eu, m);
    const double dl = d1(a, El, m);
    // du < dl since Eu > El; N(du) - N(dl) is a clean small difference.
    return std::exp(-m.q * m.tau) * (norm_cdf(du) - norm_cdf(dl)) + 1.0;
}

double future_delta_collar(double a, double Ep, double Ec, const MarketParams& m) {
    const double dp = d1(a, Ep, m);
    const double dc = d1(a, Ec, m);
    if (m.q == 0.0) {
        // N(dp) - N(dc) via erfc to keep accuracy deep in the upper tail
        // where both CDFs round to 1.
        return cdf_difference(dp, dc);
    }
    return std::exp(-m.q * m.tau) * (norm_cdf(dp) - 1.0) - norm_cdf(dc) + 1.0;
}

}  // namespace divmeas::bs
