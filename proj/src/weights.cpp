#include "divmeas/weights.hpp"

#include <cmath>
#include <string>

#include "divmeas/errors.hpp"

namespace divmeas {

namespace {

double plogp(double w) { return w > 0.0 ? -w * std::log(w) : 0.0; }

double to_unit(double nats, Unit unit) {
    return unit == Unit::nats ? nats : nats / std::log(2.0);
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights, bool allow_zero)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw validation_error("WeightVector: empty weight list");
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double w = weights_[i];
        if (!std::isfinite(w) || w < 0.0 || (!allow_zero && w == 0.0))
            throw validation_error("WeightVector: weight " + std::to_string(i) + " = " +
                                   std::to_string(w) + " is not admissible");
        sum += w;
    }
    if (std::abs(sum - 1.0) > sum_tolerance)
        throw validation_error("WeightVector: weights sum to " + std::to_string(sum) +
                               ", expected 1");
}

double herfindahl(const WeightVector& w) {
    double sq = 0.0;
    for (double wi : w.weights()) sq += wi * wi;
    return 1.0 - sq;
}

double weight_entropy(const WeightVector& w, Unit unit) {
    double nats = 0.0;
    for (double wi : w.weights()) nats += plogp(wi);
    return to_unit(nats, unit);
}

double weight_entropy_subdivision(const WeightVector& top_weights,
                                  std::span<const double> sub_entropies, Unit unit) {
    if (sub_entropies.size() != top_weights.size())
        throw validation_error("weight_entropy_subdivision: length mismatch");
    for (double e : sub_entropies)
        if (!(e >= 0.0))
            throw validation_error("weight_entropy_subdivision: sub-entropy < 0");
    double result = weight_entropy(top_weights, unit);
    const auto w = top_weights.weights();
    for (std::size_t i = 0; i < w.size(); ++i) result += w[i] * sub_entropies[i];
    return result;
}

double herfindahl_rescaled(const WeightVector& w) {
    const auto n = static_cast<double>(w.size());
    if (w.size() < 2)
        throw validation_error("herfindahl_rescaled: undefined for fewer than 2 assets");
    double sum = 0.0;
    for (double wi : w.weights()) sum += 1.0 / n - wi * wi;
    return sum * n / (n - 1.0);
}

std::vector<TwoAssetRow> two_asset_comparison_grid(std::size_t steps) {
    if (steps < 2) throw validation_error("two_asset_comparison_grid: steps must be >= 2");
    std::vector<TwoAssetRow> rows;
    rows.reserve(steps - 1);
    for (std::size_t k = 1; k < steps; ++k) {
        const double w1 = static_cast<double>(k) / static_cast<double>(steps);
        WeightVector w({w1, 1.0 - w1});
        rows.push_back({w1, weight_entropy(w, Unit::bits), herfindahl_rescaled(w),
                        plogp(w1) / std::log(2.0), 2.0 * (0.5 - w1 * w1)});
    }
    return rows;
}

std::vector<ThreeAssetRow> three_asset_comparison_grid(std::size_t w1_steps,
                                                       std::size_t h_steps) {
    if (w1_steps < 2 || h_steps < 2)
        throw validation_error("three_asset_comparison_grid: steps must be >= 2");
    std::vector<ThreeAssetRow> rows;
    rows.reserve((w1_steps - 1) * (h_steps - 1));
    const double log3 = std::log(3.0);
    for (std::size_t i = 1; i < w1_steps; ++i) {
        const double w1 = static_cast<double>(i) / static_cast<double>(w1_steps);
        for (std::size_t j = 1; j < h_steps; ++j) {
            const double h = static_cast<double>(j) / static_cast<double>(h_steps);
            const double w2 = h * (1.0 - w1);
            const double w3 = (1.0 - h) * (1.0 - w1);
            WeightVector w({w1, w2, w3});
            const double entropy_norm = weight_entropy(w, Unit::nats) / log3;
            const double herf_norm = herfindahl_rescaled(w);
            rows.push_back({w1, h, entropy_norm, herf_norm, entropy_norm - herf_norm});
        }
    }
    return rows;
}

}  // namespace divmeas
