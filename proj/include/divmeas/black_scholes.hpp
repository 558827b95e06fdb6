#ifndef DIVMEAS_BLACK_SCHOLES_HPP
#define DIVMEAS_BLACK_SCHOLES_HPP

namespace divmeas::bs {

// Option-market inputs.  q is the continuous dividend yield (the
// measure itself is written D elsewhere, hence the rename); tau is the
// option life remaining at the time the measure is evaluated.
struct MarketParams {
    double r;
    double q;
    double sigma;
    double tau;
    MarketParams(double r_, double q_, double sigma_, double tau_);
};

// Standard normal CDF via erfc; |error| <= 1e-12 over [-8, 8].
double norm_cdf(double x);

// (ln(a/E) + (r - q + sigma^2/2) tau) / (sigma sqrt(tau))
double d1(double a, double E, const MarketParams& m);

// Future delta of underlying plus bought put:  e^{-q tau}[N(d1) - 1] + 1.
double future_delta_long_put(double a, double E, const MarketParams& m);

// Underlying plus bought upper put, sold lower put:
//   e^{-q tau}[N(d1(a,Eu)) - N(d1(a,El))] + 1.
double future_delta_put_spread(double a, double Eu, double El, const MarketParams& m);

// Underlying plus bought put at Ep, sold call at Ec:
//   e^{-q tau}[N(d1(a,Ep)) - 1] - N(d1(a,Ec)) + 1.
double future_delta_collar(double a, double Ep, double Ec, const MarketParams& m);

}  // namespace divmeas::bs

#endif
