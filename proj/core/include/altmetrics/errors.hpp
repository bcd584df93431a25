#pragma once

#include <stdexcept>
#include <string>

namespace altmetrics {

// Bad input data: malformed files, schema violations, impossible requests.
// The CLI maps this to exit code 1; usage errors are exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace altmetrics
