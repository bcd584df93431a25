#include "kv_file.hpp"

#include <fstream>

#include "altmetrics/errors.hpp"

namespace altmetrics::detail {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::pair<std::string, std::string>>
parse_kv_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open config file: " + file.string());

    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw DataError(file.string() + ":" + std::to_string(lineno) +
                            ": expected key = value");
        }
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) {
            throw DataError(file.string() + ":" + std::to_string(lineno) +
                            ": empty key");
        }
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

} // namespace altmetrics::detail
