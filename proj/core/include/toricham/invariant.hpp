#pragma once

#include "toricham/delzant.hpp"

#include <string_view>
#include <vector>

namespace toricham {

/// Integer-weight combination of coordinate rotations: the loop rotates
/// z_a by e^{2πi c_a t}. A unit vector e_a is a single coordinate rotation.
struct LoopSpec {
  IntVector weights;

  static LoopSpec coordinate(std::size_t m, std::size_t a);

  friend bool operator==(const LoopSpec&, const LoopSpec&) = default;
};

enum class Verdict { InfiniteCyclicSubgroup, Inconclusive };

/// Fixed wording: "infinite cyclic subgroup in pi_1(Ham)" / "inconclusive".
std::string_view to_string(Verdict v);

/// A nonzero characteristic number certifies an infinite cyclic subgroup of
/// pi_1(Ham); zero certifies nothing.
Verdict verdict(const Rational& invariant);

struct InvariantReport {
  LoopSpec loop;
  Rational kappa;
  std::vector<Rational> facet_contributions;  // indexed by coordinate k
  Rational invariant;
  Verdict verdict = Verdict::Inconclusive;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// κ_a = ∫_Δ s_a / vol(Δ), the constant normalizing the Hamiltonian of the
/// rotation of z_a. Coordinates are 0-based here.
Rational normalized_constant(const DelzantModel& model, std::size_t a);

/// N_k = -n! (∫_{F_k} s_a dm - κ_a·|F_k|) with lattice-normalized facet
/// measure; 0 for a slice that is not a facet.
Rational facet_contribution(const DelzantModel& model, std::size_t a, std::size_t k);

/// I = Σ_k N_k for the rotation of z_a.
InvariantReport invariant_coordinate(const DelzantModel& model, std::size_t a);

/// Extends invariant_coordinate linearly to integer-weight loops.
InvariantReport invariant_loop(const DelzantModel& model, const LoopSpec& loop);

}  // namespace toricham
