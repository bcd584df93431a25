#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace altmetrics::detail {

// Parses "key = value" lines. Blank lines and '#' comments are skipped.
// Whitespace around keys and values is trimmed. Order preserved.
std::vector<std::pair<std::string, std::string>>
parse_kv_file(const std::filesystem::path& file);

std::string trim(std::string_view s);

} // namespace altmetrics::detail
