#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadconc {

enum class ErrorCode {
    DivisionByZero,
    InvalidRational,
    ZeroPoint,
    NotFinite,
    CoincidentPoints,
    IdealLine,
    CoincidentLines,
    TooFewLines,
    RatioMinusOne,
    NotCollinear,
    PAtB,
    CoincidentEndpoints,
    DegenerateQuadrilateral,
    UndefinedPoint,
    PointNotOnSide,
    InvalidRatio,
    PreconditionViolation,
    GenerationExhausted,
    InvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` identifies the contract that
/// was violated; `what()` carries a human-readable message.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }
    explicit GeometryError(ErrorCode code)
        : std::runtime_error(std::string(to_string(code))), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace quadconc
