#pragma once

#include "toricham/delzant.hpp"
#include "toricham/invariant.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace toricham::app {

/// Computes the invariant report of one loop. Suites call the pipeline
/// through this hook so that tests can substitute a deliberately broken one.
using Pipeline = std::function<InvariantReport(const DelzantModel&, const LoopSpec&)>;

InvariantReport default_pipeline(const DelzantModel& model, const LoopSpec& loop);

struct SelftestOptions {
  Pipeline pipeline = default_pipeline;
  std::uint64_t seed = 20240611;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string counterexample;  // first failure, with exact inputs
  double seconds = 0;
};

using Suite = std::function<SuiteResult(const SelftestOptions&)>;

struct SuiteEntry {
  std::string name;
  Suite run;
};

/// The (tau, mu) grid shared by the blow-up suites: 25 points, 0 < mu < tau.
std::vector<std::pair<Rational, Rational>> blowup_grid();

SuiteResult suite_oracle_consistency(const SelftestOptions& opts);
SuiteResult suite_cpn_vanishing(const SelftestOptions& opts);
SuiteResult suite_blowup_grid(const SelftestOptions& opts);
SuiteResult suite_loop_relations(const SelftestOptions& opts);
SuiteResult suite_torus_relations(const SelftestOptions& opts);
SuiteResult suite_volume_lasserre(const SelftestOptions& opts);
SuiteResult suite_choice_independence(const SelftestOptions& opts);
SuiteResult suite_scaling(const SelftestOptions& opts);
SuiteResult suite_linearity(const SelftestOptions& opts);
SuiteResult suite_normalization(const SelftestOptions& opts);
SuiteResult suite_coordinate_symmetry(const SelftestOptions& opts);
SuiteResult suite_apex_independence(const SelftestOptions& opts);
SuiteResult suite_report_roundtrip(const SelftestOptions& opts);

const std::vector<SuiteEntry>& all_suites();

/// Runs every suite, printing one line per suite; returns the results.
std::vector<SuiteResult> run_selftests(std::ostream& os, const SelftestOptions& opts = {});

}  // namespace toricham::app
