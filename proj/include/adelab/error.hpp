#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adelab {

enum class ErrorCode {
    NonPositiveDiffusivity,
    ExponentOverflow,
    IncompatibleIC,
    InvalidScenario,
    InvalidArgument,
    DegenerateGrid,
    GridMismatch,
    QuadratureNotConverged,
    NotSineMode,
    LengthMismatch,
    UnstableParameters,
    InterfaceOffGrid,
    SinkWriteFailure,
    EmptySeries,
    InvalidSeries,
    ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Domain failure raised by every adelab module. The message names the
/// violated invariant; code() lets callers branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace adelab
