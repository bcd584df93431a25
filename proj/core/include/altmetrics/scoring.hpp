#pragma once

#include <array>
#include <map>
#include <string>

#include "altmetrics/domain.hpp"
#include "altmetrics/weights.hpp"

namespace altmetrics {

// Per-publication weighted social-citation score:
//   sum over indicators of weight[k] * counts[k].
// Linear in counts, zero when all counts are zero.
double social_citation_score(const PublicationRecord& pub, const WeightTable& w);

struct ScholarTotals {
    long long publication_count = 0;
    long long scholarly_citation_sum = 0;
    double social_citation_sum = 0.0;

    bool operator==(const ScholarTotals&) const = default;
};

// One entry per scholar (including scholars with no publications).
// Keyed by scholar_id, so iteration order is deterministic.
std::map<std::string, ScholarTotals> scholar_totals(const Dataset& ds,
                                                    const WeightTable& w);

// One entry per year of the window, zero-filled years included.
std::map<int, ScholarTotals> yearly_trends(const Dataset& ds,
                                           const WeightTable& w);

// Percentage of total weighted social citations contributed by each
// indicator. Shares sum to 100 unless the dataset carries no weighted
// events at all, in which case `empty` is set and all shares are 0.
struct IndicatorBreakdown {
    std::array<double, kIndicatorCount> shares{};
    bool empty = false;
};

IndicatorBreakdown indicator_breakdown(const Dataset& ds, const WeightTable& w);

} // namespace altmetrics
