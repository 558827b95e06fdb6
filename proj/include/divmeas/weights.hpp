#ifndef DIVMEAS_WEIGHTS_HPP
#define DIVMEAS_WEIGHTS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "divmeas/entropy.hpp"

namespace divmeas {

// Portfolio weights summing to one.  Strictly positive by default;
// allow_zero enables the 0 log 0 = 0 extension needed on grid
// boundaries.
class WeightVector {
public:
    static constexpr double sum_tolerance = 1e-12;

    explicit WeightVector(std::vector<double> weights, bool allow_zero = false);

    std::span<const double> weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

private:
    std::vector<double> weights_;
};

// 1 - sum w_i^2, in [0, 1 - 1/N].
double herfindahl(const WeightVector& w);

// -sum w_i log w_i in the requested unit (bits by default elsewhere).
double weight_entropy(const WeightVector& w, Unit unit = Unit::bits);

// Entropy of a two-level portfolio from the top-level weights and the
// sub-portfolio entropies: -sum w_i log w_i + sum w_i E_i.
double weight_entropy_subdivision(const WeightVector& top_weights,
                                  std::span<const double> sub_entropies,
                                  Unit unit = Unit::bits);

// (N/(N-1)) * sum(1/N - w_i^2); equals 1 at equal weights.
double herfindahl_rescaled(const WeightVector& w);

struct TwoAssetRow {
    double w1;
    double entropy_norm;       // -sum w log2 w, max 1 at w1 = 0.5
    double herfindahl_norm;    // 2 * sum(1/2 - w^2), max 1 at w1 = 0.5
    double entropy_contrib;    // -w1 log2 w1
    double herfindahl_contrib; // 2 * (1/2 - w1^2); negative for large w1
};

struct ThreeAssetRow {
    double w1;
    double h;  // w2 = h (1 - w1)
    double entropy_norm;
    double herfindahl_norm;
    double difference;  // entropy_norm - herfindahl_norm
};

// Interior sweep w1 = k/steps, k = 1..steps-1; measures rescaled to a
// common [0, 1] range.
std::vector<TwoAssetRow> two_asset_comparison_grid(std::size_t steps);

// Interior grid over w1 and h; entropy normalized by log 3, Herfindahl
// by 3/2.  Boundary rows (any zero weight) are excluded by
// construction.
std::vector<ThreeAssetRow> three_asset_comparison_grid(std::size_t w1_steps,
                                                       std::size_t h_steps);

}  // namespace divmeas

#endif
