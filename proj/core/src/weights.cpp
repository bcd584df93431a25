#include "altmetrics/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "altmetrics/errors.hpp"
#include "kv_file.hpp"

namespace altmetrics {

std::array<double, kIndicatorCount> WeightTable::default_weights() {
    std::array<double, kIndicatorCount> w{};
    w[indicator_index(IndicatorKind::TwitterMention)] = 1.0;
    w[indicator_index(IndicatorKind::TwitterRetweet)] = 0.0;
    w[indicator_index(IndicatorKind::TwitterFavorite)] = 0.5;
    w[indicator_index(IndicatorKind::FacebookMention)] = 1.0;
    w[indicator_index(IndicatorKind::FacebookLike)] = 0.5;
    w[indicator_index(IndicatorKind::FacebookShare)] = 0.0;
    w[indicator_index(IndicatorKind::GooglePlusMention)] = 1.0;
    w[indicator_index(IndicatorKind::GooglePlusOnePlus)] = 0.5;
    w[indicator_index(IndicatorKind::MendeleyReader)] = 0.5;
    w[indicator_index(IndicatorKind::CiteULikeBookmark)] = 1.0;
    w[indicator_index(IndicatorKind::BlogMention)] = 1.0;
    w[indicator_index(IndicatorKind::WikiMention)] = 1.0;
    return w;
}

void WeightTable::set(IndicatorKind k, double w) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
        throw DataError("weight for " + std::string(indicator_name(k)) +
                        " must be a finite non-negative number");
    }
    weights_[indicator_index(k)] = w;
}

WeightTable WeightTable::load_overrides(const std::filesystem::path& file) {
    WeightTable table;
    for (const auto& [key, value] : detail::parse_kv_file(file)) {
        auto kind = indicator_from_name(key);
        if (!kind) {
            throw DataError(file.string() + ": unknown indicator key: " + key);
        }
        double w = 0.0;
        try {
            size_t pos = 0;
            w = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw DataError(file.string() + ": bad weight value for " + key +
                            ": " + value);
        }
        table.set(*kind, w);
    }
    return table;
}

} // namespace altmetrics
