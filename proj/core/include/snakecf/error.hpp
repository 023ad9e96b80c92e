#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snakecf {

/// Machine-readable failure category carried by every library exception.
enum class ErrorCode {
    domain,
    parity,
    degenerate_tail,
    size_guard,
    construction,
    invalid_slope,
    out_of_range,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::parity: return "parity";
        case ErrorCode::degenerate_tail: return "degenerate_tail";
        case ErrorCode::size_guard: return "size_guard";
        case ErrorCode::construction: return "construction";
        case ErrorCode::invalid_slope: return "invalid_slope";
        case ErrorCode::out_of_range: return "out_of_range";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace snakecf
