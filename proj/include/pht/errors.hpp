#pragma once
#include <stdexcept>
#include <string>

namespace pht {

// Exit-code mapping used by the CLI: 1 / 2 / 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrendFailure : std::runtime_error {
    explicit TrendFailure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pht
