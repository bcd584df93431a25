#include "altmetrics/domain.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

namespace altmetrics {

ValidationReport validate(const Dataset& dataset) {
    ValidationReport report;
    auto flag = [&](std::string code, std::string id, std::string msg) {
        report.violations.push_back({std::move(code), std::move(id), std::move(msg)});
    };

    std::unordered_set<std::string> scholar_ids;
    for (const auto& s : dataset.scholars) {
        if (!scholar_ids.insert(s.scholar_id).second) {
            flag("duplicate_scholar", s.scholar_id,
                 "duplicate scholar_id: " + s.scholar_id);
        }
    }

    std::unordered_map<std::string, int> pub_seen;
    for (const auto& p : dataset.publications) {
        if (++pub_seen[p.pub_id] == 2) {
            flag("duplicate_pub", p.pub_id, "duplicate pub_id: " + p.pub_id);
        }
        if (!scholar_ids.contains(p.scholar_id)) {
            flag("unknown_scholar", p.scholar_id,
                 "publication " + p.pub_id + " references unknown scholar " +
                     p.scholar_id);
        }
        if (!dataset.window.contains(p.year)) {
            flag("year_outside_window", p.pub_id,
                 "publication " + p.pub_id + " year " + std::to_string(p.year) +
                     " outside window " + std::to_string(dataset.window.from) +
                     "-" + std::to_string(dataset.window.to));
        }
        if (p.scholarly_citations < 0) {
            flag("negative_citations", p.pub_id,
                 "publication " + p.pub_id + " has negative scholarly_citations");
        }
        for (auto k : all_indicators()) {
            if (p.counts[indicator_index(k)] < 0) {
                flag("negative_count", p.pub_id,
                     "publication " + p.pub_id + " has negative count for " +
                         std::string(indicator_name(k)));
            }
        }
    }

    return report;
}

} // namespace altmetrics
