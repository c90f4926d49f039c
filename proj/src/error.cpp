#include "okdens/error.hpp"

namespace okdens {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::HasRationalRoot: return "HasRationalRoot";
    case ErrorCode::IrreducibilityUnverified: return "IrreducibilityUnverified";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnverifiedAtP: return "UnverifiedAtP";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadBound: return "BadBound";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

}  // namespace okdens
