#pragma once

#include "toricham/app/spec_file.hpp"
#include "toricham/delzant.hpp"
#include "toricham/invariant.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricham::app {

struct FacetSummary {
  std::size_t coordinate = 0;  // 1-based k of z_k
  IntVector normal;
  Integer scale;
  Rational offset;
  std::size_t vertex_count = 0;
  bool proper = false;
  Rational lattice_volume;

  friend bool operator==(const FacetSummary&, const FacetSummary&) = default;
};

struct LoopBlock {
  IntVector weights;
  Rational kappa;
  std::vector<Rational> facet_contributions;  // coordinate order
  Rational invariant;
  std::string verdict;

  friend bool operator==(const LoopBlock&, const LoopBlock&) = default;
};

/// Everything `toricham compute` reports, with rationals kept exact.
struct ReportFile {
  std::string name;
  std::size_t coordinates = 0;  // m
  std::size_t rank = 0;         // r
  std::size_t dimension = 0;    // n = m - r

  bool rank_ok = false;
  bool half_space_ok = false;
  std::optional<RatVector> half_space_witness;

  std::vector<RatVector> vertices;
  std::vector<FacetSummary> facets;
  Rational volume;
  std::string smoothness;
  std::vector<std::string> warnings;

  std::vector<LoopBlock> loops;

  friend bool operator==(const ReportFile&, const ReportFile&) = default;
};

ReportFile make_report(const ManifoldSpec& spec, const AssumptionReport& assumptions, const DelzantModel& model,
                       const std::vector<InvariantReport>& loops);

/// Fixed field order, no timestamps: identical inputs give identical bytes.
std::string to_json(const ReportFile& report);
/// Throws Error(ParseError).
ReportFile parse_report(std::string_view json_text);

void print_text(std::ostream& os, const ReportFile& report);

}  // namespace toricham::app
