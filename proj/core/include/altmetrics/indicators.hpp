#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace altmetrics {

// The 12 countable social signals. Order is canonical: file columns,
// breakdown rows and chart colors all follow it.
enum class IndicatorKind : int {
    TwitterMention = 0,
    TwitterRetweet,
    TwitterFavorite,
    FacebookMention,
    FacebookLike,
    FacebookShare,
    GooglePlusMention,
    GooglePlusOnePlus,
    MendeleyReader,
    CiteULikeBookmark,
    BlogMention,
    WikiMention,
};

inline constexpr std::size_t kIndicatorCount = 12;

constexpr std::array<IndicatorKind, kIndicatorCount> all_indicators() {
    return {
        IndicatorKind::TwitterMention,    IndicatorKind::TwitterRetweet,
        IndicatorKind::TwitterFavorite,   IndicatorKind::FacebookMention,
        IndicatorKind::FacebookLike,      IndicatorKind::FacebookShare,
        IndicatorKind::GooglePlusMention, IndicatorKind::GooglePlusOnePlus,
        IndicatorKind::MendeleyReader,    IndicatorKind::CiteULikeBookmark,
        IndicatorKind::BlogMention,       IndicatorKind::WikiMention,
    };
}

constexpr std::size_t indicator_index(IndicatorKind k) {
    return static_cast<std::size_t>(k);
}

// Canonical snake_case name, used for file columns and config keys.
std::string_view indicator_name(IndicatorKind k);

// Short display label used in the published correlation tables.
std::string_view indicator_label(IndicatorKind k);

// Inverse of indicator_name; nullopt for unknown names.
std::optional<IndicatorKind> indicator_from_name(std::string_view name);

// Per-indicator integer counts, indexed by canonical order. Missing = 0.
using IndicatorCounts = std::array<long long, kIndicatorCount>;

inline constexpr IndicatorCounts kZeroCounts{};

} // namespace altmetrics
