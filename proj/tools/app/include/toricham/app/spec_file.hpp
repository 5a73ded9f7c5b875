#pragma once

#include "toricham/invariant.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace toricham::app {

/// Manifold description read from a JSON file:
///
///   {
///     "name": "blowup-cp3",
///     "weights": [[1,0],[1,0],[1,1],[0,1],[1,0]],   // row j is w_j (m x r)
///     "tau": ["2", "1"],                              // r rationals "p/q"
///     "loops": [[1,0,0,0,0]]                          // optional, length m
///   }
///
/// Integers may be JSON numbers or decimal strings; rationals may be JSON
/// integers or strings. Floating-point numbers are rejected.
struct ManifoldSpec {
  std::string name;
  IntMatrix weights;  // r x m: column j is w_j
  RatVector tau;
  std::vector<LoopSpec> loops;
};

/// Throws Error(ParseError) naming the offending field.
ManifoldSpec parse_manifold_spec(std::string_view json_text);
ManifoldSpec load_manifold_spec(const std::filesystem::path& path);

/// Inverse of parse_manifold_spec (canonical formatting).
std::string dump_manifold_spec(const ManifoldSpec& spec);

}  // namespace toricham::app
