#ifndef DIVMEAS_DISTRIBUTIONS_HPP
#define DIVMEAS_DISTRIBUTIONS_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace divmeas {

// Normal final-value distribution, scale in currency units.
struct Gaussian {
    double mean;
    double sigma;
    Gaussian(double mean_, double sigma_);
};

// Cauchy (Lorentzian) final-value distribution; no finite moments.
struct Cauchy {
    double x0;
    double gamma;
    Cauchy(double x0_, double gamma_);
};

// Log-normal with expected value e^nu; sigma is the std dev of log x,
// so the mean of log x is nu - sigma^2/2.
struct LogNormal {
    double nu;
    double sigma;
    LogNormal(double nu_, double sigma_);
};

using AnalyticDistribution = std::variant<Gaussian, Cauchy, LogNormal>;

double pdf(const AnalyticDistribution& dist, double x);

// Tabulated density over strictly increasing abscissae.  The trapezoid
// integral must be within 1e-3 of one; the constructor renormalizes it
// to exactly one, larger deviations are rejected.
class DensityGrid {
public:
    static constexpr double norm_tolerance = 1e-3;
    static constexpr std::size_t min_points = 8;

    DensityGrid(std::vector<double> abscissae, std::vector<double> densities);

    std::span<const double> abscissae() const { return abscissae_; }
    std::span<const double> densities() const { return densities_; }
    std::size_t size() const { return abscissae_.size(); }

private:
    std::vector<double> abscissae_;
    std::vector<double> densities_;
};

// Default tabulation domains: mean +- 10 sigma for Gaussian, log-space
// mean +- 10 sigma for LogNormal, x0 +- 10^4 gamma for Cauchy.  Point
// counts below are chosen so the grid entropy matches the closed form
// to ~1e-6 nats (Cauchy additionally needs cauchy_truncation_correction).
DensityGrid tabulate(const AnalyticDistribution& dist, std::size_t points);
DensityGrid tabulate(const AnalyticDistribution& dist);

// The integral of p log p that a renormalized tabulation on
// [x0 - half_width, x0 + half_width] cannot see: the analytic tail mass
// outside the window plus the shift from renormalizing the interior.
// Adding this to d_measure_grid of the truncated tabulation recovers
// the closed-form value.
double cauchy_truncation_correction(const Cauchy& c, double half_width);

}  // namespace divmeas

#endif
