#pragma once

#include <set>
#include <string>
#include <vector>

#include "altmetrics/indicators.hpp"

namespace altmetrics {

// Inclusive calendar-year range the analysis covers.
struct YearWindow {
    int from = 2010;
    int to = 2014;

    bool contains(int year) const { return year >= from && year <= to; }
    int span() const { return to - from + 1; }
    bool operator==(const YearWindow&) const = default;
};

struct PublicationRecord {
    std::string pub_id;
    std::string scholar_id;
    int year = 0;
    long long scholarly_citations = 0;
    IndicatorCounts counts{};

    bool operator==(const PublicationRecord&) const = default;
};

// Scholar-level variable names that may be flagged unavailable; a flagged
// variable drops the scholar from listwise correlation analyses.
struct ScholarRecord {
    std::string scholar_id;
    std::string display_name;
    std::set<std::string> missing_variables;

    bool operator==(const ScholarRecord&) const = default;
};

// Immutable after construction; all analysis modules share it read-only.
struct Dataset {
    std::vector<ScholarRecord> scholars;
    std::vector<PublicationRecord> publications;
    YearWindow window;

    bool operator==(const Dataset&) const = default;
};

struct Violation {
    std::string code;       // stable machine key, e.g. "unknown_scholar"
    std::string subject_id; // offending record id
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks every dataset invariant: scholar references resolve, ids are
// unique, years are inside the window, counts are non-negative.
// Violations are data, not faults; the dataset is never modified.
ValidationReport validate(const Dataset& dataset);

} // namespace altmetrics
