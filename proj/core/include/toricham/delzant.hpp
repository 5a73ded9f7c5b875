#pragma once

#include "toricham/linalg.hpp"
#include "toricham/polytope.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricham {

/// Standing assumptions on the weight matrix W (r x m, columns w_j).
struct AssumptionReport {
  std::size_t rank = 0;
  std::size_t rows = 0;
  bool rank_ok = false;
  /// Some xi with <w_j, xi> > 0 for every j, decided exactly.
  bool half_space_ok = false;
  std::optional<RatVector> half_space_witness;

  bool ok() const { return rank_ok && half_space_ok; }
  /// Human-readable description of each violated assumption.
  std::vector<std::string> violations() const;
};

AssumptionReport check_assumptions(const IntMatrix& weights);

enum class SmoothnessClass { Delzant, SimpleOnly, NonSimple };

std::string_view to_string(SmoothnessClass c);

/// Moment polytope of the quotient {z : π Σ |z_j|² w_j = τ} / T^r written in
/// kernel-slice coordinates x ∈ Q^n: the moment coordinate π|z_k|² is the
/// affine slice s_k(x) = s0[k] + <row_k(Q), x>, and Δ = {x : s_k(x) >= 0}.
///
/// Inequality k of `polytope` and `facets[k]` belong to coordinate z_k.
struct DelzantModel {
  IntMatrix weights;      // r x m
  RatVector level;        // tau, length r
  IntMatrix kernel;       // Q, m x n
  RatVector particular;   // s0, length m
  std::vector<AffineForm> slices;
  /// row_k(Q) = normal_scales[k] * polytope.inequalities[k].normal; zero for
  /// a slice that is constant on Δ.
  std::vector<Integer> normal_scales;
  Polytope polytope;
  std::vector<Simplex> cells;
  std::vector<Facet> facets;
  Rational volume;
  SmoothnessClass smoothness = SmoothnessClass::Delzant;
  std::vector<std::string> warnings;

  std::size_t coordinate_count() const { return weights.cols(); }
  std::size_t dimension() const { return kernel.cols(); }
};

/// Builds the model with a canonical kernel basis (Hermite form) and the
/// particular solution anchored at the vertex whose slice values are
/// lexicographically smallest.
///
/// Throws Error(AssumptionViolated), Error(NoSolution),
/// Error(EmptyPolytope), Error(UnboundedPolytope),
/// Error(NotFullDimensional) or Error(DegenerateInput) (when m == r).
DelzantModel build_model(const IntMatrix& weights, const RatVector& level);

/// Same, with an explicit kernel basis and particular solution. The basis
/// must generate the saturated kernel lattice of W and W·s0 must equal τ.
/// Throws Error(InvalidArgument) when they do not.
DelzantModel build_model(const IntMatrix& weights, const RatVector& level, const IntMatrix& kernel,
                         const RatVector& particular);

SmoothnessClass smoothness_class(const Polytope& p);
inline SmoothnessClass smoothness_class(const DelzantModel& model) { return model.smoothness; }

}  // namespace toricham
