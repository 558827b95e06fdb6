#ifndef DIVMEAS_QUADRATURE_HPP
#define DIVMEAS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace divmeas::quad {

// True if the abscissae are evenly spaced within a relative tolerance.
bool uniform_spacing(std::span<const double> x, double rel_tol = 1e-9);

// Composite Simpson over evenly spaced samples with step h.  An even
// interval count is handled exactly; an odd count falls back to a
// trapezoid on the last panel.
double simpson_uniform(std::span<const double> y, double h);

// Trapezoid rule over arbitrary strictly increasing abscissae.
double trapezoid(std::span<const double> x, std::span<const double> y);

// Integral of tabulated samples: Simpson when the grid is uniform,
// trapezoid otherwise.
double integrate(std::span<const double> x, std::span<const double> y);

// Running trapezoid integral; result[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> x,
                                         std::span<const double> y);

// Composite Simpson of f over [a, b], doubling the panel count from
// initial_points until two successive refinements differ by less than
// abs_tol (or the point cap is hit, in which case the last value is
// returned).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-8, std::size_t initial_points = 2001,
                        std::size_t max_points = 600000);

}  // namespace divmeas::quad

#endif
