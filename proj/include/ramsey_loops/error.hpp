#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey_loops {

enum class ErrorCode {
    InvalidArgument,
    UnsupportedContour,
    ZeroLengthEdge,
    CoincidentPoints,
    DegenerateSlope,
    CornerHit,
    Grazing,
    NoIntersection,
    OnBoundary,
    WindingResidual,
    NotSimple,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::UnsupportedContour: return "unsupported_contour";
        case ErrorCode::ZeroLengthEdge: return "zero_length_edge";
        case ErrorCode::CoincidentPoints: return "coincident_points";
        case ErrorCode::DegenerateSlope: return "degenerate_slope";
        case ErrorCode::CornerHit: return "corner_hit";
        case ErrorCode::Grazing: return "grazing";
        case ErrorCode::NoIntersection: return "no_intersection";
        case ErrorCode::OnBoundary: return "on_boundary";
        case ErrorCode::WindingResidual: return "winding_residual";
        case ErrorCode::NotSimple: return "not_simple";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ramsey_loops
