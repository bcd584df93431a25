#pragma once

#include <span>
#include <string>
#include <vector>

#include "altmetrics/domain.hpp"
#include "altmetrics/weights.hpp"

namespace altmetrics {

// Largest k such that at least k entries are >= k. Permutation-invariant.
long long h_index(std::span<const long long> citations);

// Same rule over fractional social scores, tested against integer
// thresholds: a score of 2.5 counts toward threshold 2.
long long alt_index(std::span<const double> scores);

struct ScholarIndices {
    std::string scholar_id;
    long long h_index = 0;
    long long alt_index = 0;

    bool operator==(const ScholarIndices&) const = default;
};

// One entry per scholar, sorted by scholar_id. h from scholarly citations,
// alt from weighted social scores, both over the window publications.
std::vector<ScholarIndices> scholar_index_table(const Dataset& ds,
                                                const WeightTable& w);

} // namespace altmetrics
