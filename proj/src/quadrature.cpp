#include "divmeas/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "divmeas/errors.hpp"

namespace divmeas::quad {

bool uniform_spacing(std::span<const double> x, double rel_tol) {
    if (x.size() < 3) return true;
    const double h0 = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (h0 <= 0.0) return false;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double h = x[i] - x[i - 1];
        if (std::abs(h - h0) > rel_tol * std::abs(h0)) return false;
    }
    return true;
}

double simpson_uniform(std::span<const double> y, double h) {
    const std::size_t n = y.size();
    if (n < 2) throw validation_error("simpson_uniform: need at least 2 samples");
    if (n == 2) return 0.5 * h * (y[0] + y[1]);

    // Use an even number of panels; an odd count leaves one trapezoid panel.
    std::size_t last = (n % 2 == 1) ? n - 1 : n - 2;
    double sum = y[0] + y[last];
    for (std::size_t i = 1; i < last; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * y[i];
    double result = sum * h / 3.0;
    if (n % 2 == 0) result += 0.5 * h * (y[n - 2] + y[n - 1]);
    return result;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw validation_error("trapezoid: mismatched or short input");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        sum += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return sum;
}

double integrate(std::span<const double> x, std::span<const double> y) {
    if (uniform_spacing(x)) {
        const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
        return simpson_uniform(y, h);
    }
    return trapezoid(x, y);
}

std::vector<double> cumulative_trapezoid(std::span<const double> x,
                                         std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw validation_error("cumulative_trapezoid: mismatched or short input");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return out;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, std::size_t initial_points,
                        std::size_t max_points) {
    if (!(b > a)) throw validation_error("adaptive_simpson: empty interval");
    std::size_t n = initial_points | 1;  // odd point count
    auto eval = [&](std::size_t points) {
        const double h = (b - a) / static_cast<double>(points - 1);
        std::vector<double> y(points);
        for (std::size_t i = 0; i < points; ++i)
            y[i] = f(a + h * static_cast<double>(i));
        return simpson_uniform(y, h);
    };
    double prev = eval(n);
    while (2 * n - 1 <= max_points) {
        n = 2 * n - 1;
        const double cur = eval(n);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace divmeas::quad
