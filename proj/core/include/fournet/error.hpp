#pragma once

#include <stdexcept>
#include <string>

namespace fournet {

// Raised for any input that violates a domain invariant. The message names
// the offending field (and player id, where one applies).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace fournet
