#pragma once

#include "toricham/linalg.hpp"

#include <optional>
#include <vector>

namespace toricham {

/// coeffs·x + constant >= 0, or > 0 when strict.
struct LinearConstraint {
  RatVector coeffs;
  Rational constant;
  bool strict = false;
};

/// Decides feasibility of a system of linear (strict and non-strict)
/// inequalities exactly by Fourier–Motzkin elimination. Returns a witness
/// point on success. Intended for small systems (tens of constraints).
std::optional<RatVector> find_feasible_point(std::vector<LinearConstraint> system, std::size_t dim);

inline bool is_feasible(std::vector<LinearConstraint> system, std::size_t dim) {
  return find_feasible_point(std::move(system), dim).has_value();
}

}  // namespace toricham
