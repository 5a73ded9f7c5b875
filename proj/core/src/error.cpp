#include "toricham/error.hpp"

namespace toricham {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_validation_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSolution:
    case ErrorCode::EmptyPolytope:
    case ErrorCode::UnboundedPolytope:
    case ErrorCode::NotFullDimensional:
    case ErrorCode::DegenerateInput:
    case ErrorCode::AssumptionViolated:
    case ErrorCode::BadParams:
      return true;
    default:
      return false;
  }
}

}  // namespace toricham
