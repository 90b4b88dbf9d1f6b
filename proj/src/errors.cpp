#include <quadconc/errors.hpp>

namespace quadconc {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::IdealLine: return "IdealLine";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::TooFewLines: return "TooFewLines";
    case ErrorCode::RatioMinusOne: return "RatioMinusOne";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::PAtB: return "PAtB";
    case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorCode::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
    case ErrorCode::UndefinedPoint: return "UndefinedPoint";
    case ErrorCode::PointNotOnSide: return "PointNotOnSide";
    case ErrorCode::InvalidRatio: return "InvalidRatio";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

} // namespace quadconc
