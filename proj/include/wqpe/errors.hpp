#pragma once

#include <stdexcept>
#include <string>

namespace wqpe {

// Bad parameters / malformed configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Spectral-gap promise violated for the requested register sizes (exit 3).
struct GapError : std::runtime_error {
    explicit GapError(const std::string& what) : std::runtime_error(what) {}
};

// Error budget unreachable within the search cap (exit 4).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wqpe
