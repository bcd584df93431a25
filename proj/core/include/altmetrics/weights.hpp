#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "altmetrics/indicators.hpp"

namespace altmetrics {

// Total map IndicatorKind -> non-negative weight. The default instance is
// the published weightage table: direct mentions and bookmarks score 1,
// readers/favorites/likes/one-plus score 0.5. Retweets and shares carry no
// published weight and default to 0; load an override file to change that.
class WeightTable {
public:
    WeightTable() : weights_(default_weights()) {}

    double operator[](IndicatorKind k) const { return weights_[indicator_index(k)]; }

    void set(IndicatorKind k, double w);

    bool operator==(const WeightTable&) const = default;

    // key = value lines, canonical snake_case keys, '#' comments.
    // Unknown keys and negative weights are load errors. Keys not present
    // keep their default weight.
    static WeightTable load_overrides(const std::filesystem::path& file);

    static std::array<double, kIndicatorCount> default_weights();

private:
    std::array<double, kIndicatorCount> weights_;
};

} // namespace altmetrics
