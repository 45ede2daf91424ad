#include "adelab/error.hpp"

namespace adelab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveDiffusivity: return "NonPositiveDiffusivity";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::IncompatibleIC: return "IncompatibleIC";
        case ErrorCode::InvalidScenario: return "InvalidScenario";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateGrid: return "DegenerateGrid";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorCode::NotSineMode: return "NotSineMode";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::UnstableParameters: return "UnstableParameters";
        case ErrorCode::InterfaceOffGrid: return "InterfaceOffGrid";
        case ErrorCode::SinkWriteFailure: return "SinkWriteFailure";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::InvalidSeries: return "InvalidSeries";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace adelab
