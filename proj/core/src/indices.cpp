#include "altmetrics/indices.hpp"

#include <algorithm>
#include <map>

#include "altmetrics/scoring.hpp"

namespace altmetrics {

namespace {

// After sorting descending, the index is the largest k with sorted[k-1] >= k.
template <typename T>
long long threshold_index(std::vector<T> values) {
    std::sort(values.begin(), values.end(), std::greater<T>());
    long long h = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= static_cast<T>(i + 1)) {
            h = static_cast<long long>(i + 1);
        } else {
            break;
        }
    }
    return h;
}

} // namespace

long long h_index(std::span<const long long> citations) {
    return threshold_index(std::vector<long long>(citations.begin(), citations.end()));
}

long long alt_index(std::span<const double> scores) {
    return threshold_index(std::vector<double>(scores.begin(), scores.end()));
}

std::vector<ScholarIndices> scholar_index_table(const Dataset& ds,
                                                const WeightTable& w) {
    std::map<std::string, std::pair<std::vector<long long>, std::vector<double>>>
        per_scholar;
    for (const auto& s : ds.scholars) per_scholar[s.scholar_id];
    for (const auto& p : ds.publications) {
        if (!ds.window.contains(p.year)) continue;
        auto& [cites, scores] = per_scholar[p.scholar_id];
        cites.push_back(p.scholarly_citations);
        scores.push_back(social_citation_score(p, w));
    }

    std::vector<ScholarIndices> table;
    table.reserve(per_scholar.size());
    for (const auto& [id, lists] : per_scholar) {
        table.push_back({id, h_index(lists.first), alt_index(lists.second)});
    }
    return table;
}

} // namespace altmetrics
