#include "altmetrics/indicators.hpp"

namespace altmetrics {

namespace {

constexpr std::array<std::string_view, kIndicatorCount> kNames = {
    "twitter_mention",  "twitter_retweet",    "twitter_favorite",
    "facebook_mention", "facebook_like",      "facebook_share",
    "googleplus_mention", "googleplus_one_plus", "mendeley_reader",
    "citeulike_bookmark", "blog_mention",     "wiki_mention",
};

constexpr std::array<std::string_view, kIndicatorCount> kLabels = {
    "tweets",   "Retweets", "Favorites", "Facebook", "Like",      "Shares",
    "Google",   "One_plus", "Readers",   "Bookmarks", "Blog",     "Wiki",
};

} // namespace

std::string_view indicator_name(IndicatorKind k) {
    return kNames[indicator_index(k)];
}

std::string_view indicator_label(IndicatorKind k) {
    return kLabels[indicator_index(k)];
}

std::optional<IndicatorKind> indicator_from_name(std::string_view name) {
    for (auto k : all_indicators()) {
        if (kNames[indicator_index(k)] == name) return k;
    }
    return std::nullopt;
}

} // namespace altmetrics
