#include "matineq/error.hpp"

namespace matineq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::SingularPower: return "SingularPower";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::BadNormId: return "BadNormId";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NotSumSymmetric: return "NotSumSymmetric";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownLaw: return "UnknownLaw";
    case ErrorCode::UnknownProblem: return "UnknownProblem";
    case ErrorCode::UnsupportedDim: return "UnsupportedDim";
    case ErrorCode::TooLong: return "TooLong";
    case ErrorCode::NoBound: return "NoBound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace matineq
