#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricham {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  DimensionMismatch,
  InvalidArgument,
  NoSolution,
  ZeroVector,
  NotSquare,
  EmptyPolytope,
  UnboundedPolytope,
  NotFullDimensional,
  DegenerateInput,
  AssumptionViolated,
  BadParams,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// True for errors that mean "the input is well formed but mathematically
/// unusable" (empty or unbounded polytope, failed standing assumption, ...),
/// as opposed to malformed input or programming errors.
bool is_validation_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricham
