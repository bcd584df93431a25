#include "altmetrics/scoring.hpp"

namespace altmetrics {

double social_citation_score(const PublicationRecord& pub, const WeightTable& w) {
    double score = 0.0;
    for (auto k : all_indicators()) {
        score += w[k] * static_cast<double>(pub.counts[indicator_index(k)]);
    }
    return score;
}

std::map<std::string, ScholarTotals> scholar_totals(const Dataset& ds,
                                                    const WeightTable& w) {
    std::map<std::string, ScholarTotals> totals;
    for (const auto& s : ds.scholars) totals[s.scholar_id];
    for (const auto& p : ds.publications) {
        auto& t = totals[p.scholar_id];
        t.publication_count += 1;
        t.scholarly_citation_sum += p.scholarly_citations;
        t.social_citation_sum += social_citation_score(p, w);
    }
    return totals;
}

std::map<int, ScholarTotals> yearly_trends(const Dataset& ds,
                                           const WeightTable& w) {
    std::map<int, ScholarTotals> trends;
    for (int y = ds.window.from; y <= ds.window.to; ++y) trends[y];
    for (const auto& p : ds.publications) {
        if (!ds.window.contains(p.year)) continue;
        auto& t = trends[p.year];
        t.publication_count += 1;
        t.scholarly_citation_sum += p.scholarly_citations;
        t.social_citation_sum += social_citation_score(p, w);
    }
    return trends;
}

IndicatorBreakdown indicator_breakdown(const Dataset& ds, const WeightTable& w) {
    std::array<double, kIndicatorCount> weighted{};
    for (const auto& p : ds.publications) {
        for (auto k : all_indicators()) {
            size_t i = indicator_index(k);
            weighted[i] += w[k] * static_cast<double>(p.counts[i]);
        }
    }
    double total = 0.0;
    for (double v : weighted) total += v;

    IndicatorBreakdown breakdown;
    if (total <= 0.0) {
        breakdown.empty = true;
        return breakdown;
    }
    for (size_t i = 0; i < kIndicatorCount; ++i) {
        breakdown.shares[i] = 100.0 * weighted[i] / total;
    }
    return breakdown;
}

} // namespace altmetrics
