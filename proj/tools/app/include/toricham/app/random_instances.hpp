#pragma once

#include "toricham/linalg.hpp"

#include <cstddef>
#include <random>

namespace toricham::app {

using Rng = std::mt19937_64;

/// Quotient data (W, tau) whose moment polytope is bounded, full-dimensional
/// and has polytope dimension n with m slices. Built from an H-polytope that
/// contains the origin in its interior, so every assumption holds.
struct RandomQuotient {
  IntMatrix weights;  // r x m
  RatVector level;    // length r
};

RandomQuotient random_quotient(Rng& rng, std::size_t n, std::size_t m);

/// Product of a few elementary integer operations; det = ±1.
IntMatrix random_unimodular(Rng& rng, std::size_t n);

/// Entries p/q with |p| <= 3, 1 <= q <= 3.
RatVector random_rational_vector(Rng& rng, std::size_t n);

}  // namespace toricham::app
