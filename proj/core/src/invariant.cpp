#include "toricham/invariant.hpp"

#include "toricham/error.hpp"

namespace toricham {
namespace {

void check_coordinate(const DelzantModel& model, std::size_t a) {
  if (a >= model.coordinate_count()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate index " + std::to_string(a + 1) +
                                                " out of range 1.." + std::to_string(model.coordinate_count()));
  }
}

Rational contribution(const DelzantModel& model, std::size_t a, const Rational& kappa, std::size_t k) {
  const Facet& facet = model.facets[k];
  if (!facet.proper) return Rational(0);
  const Rational n_factorial(factorial(static_cast<unsigned>(model.dimension())));
  return -n_factorial * (integrate_affine_facet(facet, model.slices[a]) - kappa * facet_lattice_volume(facet));
}

}  // namespace

LoopSpec LoopSpec::coordinate(std::size_t m, std::size_t a) {
  if (a >= m) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
  LoopSpec loop{IntVector(m)};
  loop.weights[a] = 1;
  return loop;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::InfiniteCyclicSubgroup ? "infinite cyclic subgroup in pi_1(Ham)" : "inconclusive";
}

Verdict verdict(const Rational& invariant) {
  return invariant.is_zero() ? Verdict::Inconclusive : Verdict::InfiniteCyclicSubgroup;
}

Rational normalized_constant(const DelzantModel& model, std::size_t a) {
  check_coordinate(model, a);
  return integrate_affine(model.cells, model.slices[a]) / model.volume;
}

Rational facet_contribution(const DelzantModel& model, std::size_t a, std::size_t k) {
  check_coordinate(model, a);
  check_coordinate(model, k);
  return contribution(model, a, normalized_constant(model, a), k);
}

InvariantReport invariant_coordinate(const DelzantModel& model, std::size_t a) {
  InvariantReport report;
  report.loop = LoopSpec::coordinate(model.coordinate_count(), a);
  report.kappa = normalized_constant(model, a);
  for (std::size_t k = 0; k < model.coordinate_count(); ++k) {
    report.facet_contributions.push_back(contribution(model, a, report.kappa, k));
    report.invariant += report.facet_contributions.back();
  }
  report.verdict = verdict(report.invariant);
  return report;
}

InvariantReport invariant_loop(const DelzantModel& model, const LoopSpec& loop) {
  const std::size_t m = model.coordinate_count();
  if (loop.weights.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "loop has " + std::to_string(loop.weights.size()) +
                                                  " weights but the manifold has " + std::to_string(m) +
                                                  " coordinates");
  }
  InvariantReport report;
  report.loop = loop;
  report.facet_contributions.assign(m, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    if (loop.weights[a] == 0) continue;
    const Rational c(loop.weights[a]);
    const auto single = invariant_coordinate(model, a);
    report.kappa += c * single.kappa;
    for (std::size_t k = 0; k < m; ++k) report.facet_contributions[k] += c * single.facet_contributions[k];
    report.invariant += c * single.invariant;
  }
  report.verdict = verdict(report.invariant);
  return report;
}

}  // namespace toricham
