#include "toricham/app/selftest.hpp"

#include "toricham/app/random_instances.hpp"
#include "toricham/app/report.hpp"
#include "toricham/error.hpp"
#include "toricham/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

namespace toricham::app {
namespace {

namespace orc = toricham::oracles;

class Checker {
 public:
  explicit Checker(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& context) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = context;
    }
  }

  // Runs body; an exception counts as a failed check.
  template <typename F>
  void guard(const std::string& context, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, context + ": threw " + e.what());
    }
  }

  bool failed() const { return !result_.passed; }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

struct Quotient {
  std::string label;
  IntMatrix weights;
  RatVector level;
};

template <typename V>
std::string show(const V& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string show(const IntMatrix& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < w.cols(); ++j) os << (j ? " " : "") << w(i, j);
  }
  os << "]";
  return os.str();
}

std::string show(const Quotient& q) { return q.label + " W = " + show(q.weights) + ", tau = " + show(q.level); }

std::string show_point(const Rational& tau, const Rational& mu) {
  return "blow-up tau = " + tau.str() + ", mu = " + mu.str();
}

Quotient blowup_quotient(const Rational& tau, const Rational& mu) {
  const auto q = orc::blowup_model(orc::BlowupParams(tau, mu));
  return {"blow-up", q.weights, q.level};
}

Quotient cpn_quotient(unsigned n, const Rational& tau) {
  const auto q = orc::cpn_model(n, tau);
  return {"CP^" + std::to_string(n), q.weights, q.level};
}

// Random instances with polytope dimension cycling through 1..4 and m <= 10.
std::vector<Quotient> random_quotients(Rng& rng, std::size_t count) {
  std::vector<Quotient> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 4;
    const std::size_t m = n + 1 + std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(4, 9 - n))(rng);
    const auto q = random_quotient(rng, n, m);
    out.push_back({"random #" + std::to_string(i + 1), q.weights, q.level});
  }
  return out;
}

std::vector<Quotient> standard_quotients(Rng& rng, std::size_t random_count) {
  std::vector<Quotient> out{blowup_quotient(Rational(2), Rational(1)), blowup_quotient(Rational(7, 3), Rational(1, 2)),
                            cpn_quotient(1, Rational(2)), cpn_quotient(2, Rational(3))};
  for (auto& q : random_quotients(rng, random_count)) out.push_back(std::move(q));
  return out;
}

DelzantModel model_of(const Quotient& q) { return build_model(q.weights, q.level); }

Rational sum(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

bool same_report(const InvariantReport& a, const InvariantReport& b) {
  return a.kappa == b.kappa && a.facet_contributions == b.facet_contributions && a.invariant == b.invariant &&
         a.verdict == b.verdict;
}

std::vector<RatVector> slice_space_vertices(const DelzantModel& model) {
  std::vector<RatVector> out;
  for (const auto& v : model.polytope.vertices) {
    RatVector s;
    for (const auto& f : model.slices) s.push_back(f(v));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

InvariantReport default_pipeline(const DelzantModel& model, const LoopSpec& loop) {
  return invariant_loop(model, loop);
}

std::vector<std::pair<Rational, Rational>> blowup_grid() {
  const std::vector<Rational> taus{Rational(1), Rational(2), Rational(3), Rational(5, 2), Rational(7, 3)};
  const std::vector<Rational> ratios{Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(4, 5)};
  std::vector<std::pair<Rational, Rational>> grid;
  for (const auto& t : taus)
    for (const auto& r : ratios) grid.emplace_back(t, t * r);
  return grid;
}

SuiteResult suite_oracle_consistency(const SelftestOptions&) {
  Checker c("oracle-consistency");
  for (const auto& [tau, mu] : blowup_grid()) {
    const std::string at = show_point(tau, mu);
    c.guard(at, [&] {
      const orc::BlowupParams p(tau, mu);
      const Rational i = orc::invariant(p);
      c.expect(orc::invariant_closed_form(p) == orc::invariant_from_kappa(p), at + ": closed form vs kappa route");
      c.expect(sum(orc::facet_values(p, orc::BlowupLoop::Psi)) == i, at + ": facet sum vs I");
      c.expect(sum(orc::facet_values(p, orc::BlowupLoop::PsiTilde)) == orc::invariant_tilde(p), at + ": facet sum vs I~");
      c.expect(sum(orc::facet_values(p, orc::BlowupLoop::PsiHat)) == orc::invariant_hat(p), at + ": facet sum vs I^");
      c.expect(orc::kappa_tilde(p) + orc::kappa_hat(p) == mu, at + ": kappa~ + kappa^ = mu");
      c.expect(Rational(3) * orc::kappa(p) + orc::kappa_tilde(p) == tau, at + ": 3 kappa + kappa~ = tau");
    });
  }
  c.guard("spot value", [&] {
    const orc::BlowupParams p(Rational(2), Rational(1));
    c.expect(orc::invariant(p) == Rational(-1, 2), "blow-up (2, 1): I = " + orc::invariant(p).str());
    c.expect(orc::kappa(p) == Rational(15, 28), "blow-up (2, 1): kappa = " + orc::kappa(p).str());
  });
  for (unsigned n = 1; n <= 5; ++n) {
    const std::string at = "CP^" + std::to_string(n);
    c.guard(at, [&] {
      const auto v = orc::cpn_values(n, Rational(3, 2));
      c.expect(v.invariant == 0 && sum(v.facets) == v.invariant, at + ": I = " + v.invariant.str());
    });
  }
  return c.finish();
}

SuiteResult suite_cpn_vanishing(const SelftestOptions& opts) {
  Checker c("cpn-vanishing");
  const std::vector<Rational> taus{Rational(1), Rational(2), Rational(3), Rational(5, 2), Rational(7, 3)};
  for (unsigned n = 1; n <= 5 && !c.failed(); ++n) {
    for (const auto& tau : taus) {
      const auto q = cpn_quotient(n, tau);
      c.guard(show(q), [&] {
        const auto model = model_of(q);
        const auto expected = orc::cpn_values(n, tau);
        const auto r = opts.pipeline(model, LoopSpec::coordinate(n + 1, 0));
        const std::string at = show(q) + ", loop e1";
        c.expect(r.invariant == 0, at + ": I = " + r.invariant.str() + ", expected 0");
        c.expect(r.kappa == expected.kappa, at + ": kappa = " + r.kappa.str() + ", oracle " + expected.kappa.str());
        c.expect(r.facet_contributions == expected.facets,
                 at + ": facets " + show(r.facet_contributions) + ", oracle " + show(expected.facets));
        c.expect(r.verdict == Verdict::Inconclusive, at + ": verdict");
      });
    }
  }
  return c.finish();
}

SuiteResult suite_blowup_grid(const SelftestOptions& opts) {
  Checker c("blowup-grid");
  for (const auto& [tau, mu] : blowup_grid()) {
    const std::string at = show_point(tau, mu) + ", loop e1";
    c.guard(at, [&] {
      const orc::BlowupParams p(tau, mu);
      const auto model = model_of(blowup_quotient(tau, mu));
      const auto r = opts.pipeline(model, LoopSpec::coordinate(5, 0));
      const Rational i = orc::invariant(p);
      const auto facets = orc::facet_values(p, orc::BlowupLoop::Psi);
      c.expect(r.invariant == i, at + ": I = " + r.invariant.str() + ", oracle " + i.str());
      c.expect(r.kappa == orc::kappa(p), at + ": kappa = " + r.kappa.str() + ", oracle " + orc::kappa(p).str());
      c.expect(r.facet_contributions == facets,
               at + ": facets " + show(r.facet_contributions) + ", oracle " + show(facets));
      c.expect(!r.invariant.is_zero() && r.verdict == Verdict::InfiniteCyclicSubgroup, at + ": verdict");
    });
  }
  return c.finish();
}

SuiteResult suite_loop_relations(const SelftestOptions& opts) {
  Checker c("loop-relations");
  for (const auto& [tau, mu] : blowup_grid()) {
    const std::string at = show_point(tau, mu);
    c.guard(at, [&] {
      const orc::BlowupParams p(tau, mu);
      const auto model = model_of(blowup_quotient(tau, mu));
      const auto r1 = opts.pipeline(model, LoopSpec::coordinate(5, 0));
      const auto r3 = opts.pipeline(model, LoopSpec::coordinate(5, 2));
      const auto r4 = opts.pipeline(model, LoopSpec::coordinate(5, 3));
      c.expect(r4.invariant == -r3.invariant,
               at + ": I(e4) = " + r4.invariant.str() + ", -I(e3) = " + (-r3.invariant).str());
      c.expect(r4.invariant == Rational(3) * r1.invariant,
               at + ": I(e4) = " + r4.invariant.str() + ", 3 I(e1) = " + (Rational(3) * r1.invariant).str());
      c.expect(r3.invariant == orc::invariant_tilde(p),
               at + ": I(e3) = " + r3.invariant.str() + ", oracle " + orc::invariant_tilde(p).str());
      c.expect(r4.invariant == orc::invariant_hat(p),
               at + ": I(e4) = " + r4.invariant.str() + ", oracle " + orc::invariant_hat(p).str());
      c.expect(r3.kappa == orc::kappa_tilde(p), at + ": kappa(e3) = " + r3.kappa.str());
      c.expect(r4.kappa == orc::kappa_hat(p), at + ": kappa(e4) = " + r4.kappa.str());
      c.expect(r3.facet_contributions == orc::facet_values(p, orc::BlowupLoop::PsiTilde),
               at + ": facets(e3) " + show(r3.facet_contributions));
      c.expect(r4.facet_contributions == orc::facet_values(p, orc::BlowupLoop::PsiHat),
               at + ": facets(e4) " + show(r4.facet_contributions));
    });
  }
  return c.finish();
}

SuiteResult suite_torus_relations(const SelftestOptions& opts) {
  Checker c("torus-relations");
  Rng rng(opts.seed);
  for (const auto& q : standard_quotients(rng, 3)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      for (std::size_t i = 0; i < q.weights.rows(); ++i) {
        const auto row = q.weights.row(i);
        const LoopSpec loop{IntVector(row.begin(), row.end())};
        const auto r = opts.pipeline(model, loop);
        const std::string at = show(q) + ", loop = row " + std::to_string(i + 1) + " " + show(loop.weights);
        c.expect(r.invariant == 0, at + ": I = " + r.invariant.str());
        c.expect(std::all_of(r.facet_contributions.begin(), r.facet_contributions.end(),
                             [](const Rational& x) { return x.is_zero(); }),
                 at + ": facets " + show(r.facet_contributions));
      }
    });
  }
  return c.finish();
}

SuiteResult suite_volume_lasserre(const SelftestOptions& opts) {
  Checker c("volume-lasserre");
  Rng rng(opts.seed + 1);
  for (const auto& q : random_quotients(rng, 12)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      const Rational tri = volume(model.polytope);
      const Rational las = lasserre_volume(model.polytope);
      c.expect(tri == las, show(q) + ": triangulation " + tri.str() + ", Lasserre " + las.str());
      c.expect(model.volume == tri, show(q) + ": model volume " + model.volume.str());
    });
  }
  return c.finish();
}

SuiteResult suite_choice_independence(const SelftestOptions& opts) {
  Checker c("choice-independence");
  Rng rng(opts.seed + 2);
  for (const auto& q : standard_quotients(rng, 2)) {
    c.guard(show(q), [&] {
      const auto base = model_of(q);
      const std::size_t m = base.coordinate_count();
      const std::size_t n = base.dimension();
      std::vector<InvariantReport> expected;
      for (std::size_t a = 0; a < m; ++a) expected.push_back(opts.pipeline(base, LoopSpec::coordinate(m, a)));
      const auto base_slices = slice_space_vertices(base);
      for (int trial = 0; trial < 5; ++trial) {
        const IntMatrix u = random_unimodular(rng, n);
        const RatVector v = random_rational_vector(rng, n);
        const IntMatrix kernel = multiply(base.kernel, u);
        RatVector particular = base.particular;
        const RatVector shift = multiply(base.kernel, std::span<const Rational>(v));
        for (std::size_t k = 0; k < m; ++k) particular[k] += shift[k];
        const std::string at = show(q) + ", U = " + show(u) + ", shift v = " + show(v);

        const auto other = build_model(q.weights, q.level, kernel, particular);
        c.expect(other.volume == base.volume, at + ": volume " + other.volume.str() + " vs " + base.volume.str());
        c.expect(other.polytope.vertices.size() == base.polytope.vertices.size(), at + ": vertex count");
        c.expect(other.smoothness == base.smoothness, at + ": smoothness class");
        c.expect(slice_space_vertices(other) == base_slices, at + ": vertices in slice space");
        for (std::size_t k = 0; k < m; ++k) {
          c.expect(other.facets[k].proper == base.facets[k].proper &&
                       facet_lattice_volume(other.facets[k]) == facet_lattice_volume(base.facets[k]),
                   at + ": facet " + std::to_string(k + 1) + " lattice volume");
        }
        for (std::size_t a = 0; a < m; ++a) {
          const auto r = opts.pipeline(other, LoopSpec::coordinate(m, a));
          c.expect(same_report(r, expected[a]), at + ", loop e" + std::to_string(a + 1) + ": I = " +
                                                    r.invariant.str() + " vs " + expected[a].invariant.str());
        }
      }
    });
  }
  return c.finish();
}

SuiteResult suite_scaling(const SelftestOptions& opts) {
  Checker c("scaling");
  for (const Rational& gamma : {Rational(2), Rational(1, 3)}) {
    for (const auto& [tau, mu] : blowup_grid()) {
      const std::string at = show_point(tau, mu) + ", gamma = " + gamma.str();
      c.guard(at, [&] {
        const auto small = model_of(blowup_quotient(tau, mu));
        const auto large = model_of(blowup_quotient(gamma * tau, gamma * mu));
        const auto a = opts.pipeline(small, LoopSpec::coordinate(5, 0));
        const auto b = opts.pipeline(large, LoopSpec::coordinate(5, 0));
        c.expect(b.invariant == pow(gamma, 3) * a.invariant,
                 at + ": I(scaled) = " + b.invariant.str() + ", gamma^3 I = " + (pow(gamma, 3) * a.invariant).str());
        c.expect(b.kappa == gamma * a.kappa, at + ": kappa");
        c.expect(large.volume == pow(gamma, 3) * small.volume, at + ": volume");
      });
    }
  }
  return c.finish();
}

SuiteResult suite_linearity(const SelftestOptions& opts) {
  Checker c("linearity");
  Rng rng(opts.seed + 3);
  for (const auto& q : standard_quotients(rng, 2)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      const std::size_t m = model.coordinate_count();
      std::vector<InvariantReport> basis;
      for (std::size_t a = 0; a < m; ++a) basis.push_back(opts.pipeline(model, LoopSpec::coordinate(m, a)));
      for (const auto& r : basis) {
        c.expect(sum(r.facet_contributions) == r.invariant, show(q) + ", loop " + show(r.loop.weights) + ": sum");
      }
      for (int trial = 0; trial < 3; ++trial) {
        LoopSpec loop;
        for (std::size_t a = 0; a < m; ++a) loop.weights.emplace_back(std::uniform_int_distribution<long>(-3, 3)(rng));
        Rational expected;
        for (std::size_t a = 0; a < m; ++a) expected += Rational(loop.weights[a]) * basis[a].invariant;
        const auto r = opts.pipeline(model, loop);
        const std::string at = show(q) + ", loop " + show(loop.weights);
        c.expect(r.invariant == expected, at + ": I = " + r.invariant.str() + ", combination " + expected.str());
        c.expect(sum(r.facet_contributions) == r.invariant, at + ": facet sum");
        c.expect(r.verdict == verdict(r.invariant), at + ": verdict");
      }
    });
  }
  return c.finish();
}

SuiteResult suite_normalization(const SelftestOptions& opts) {
  Checker c("normalization");
  Rng rng(opts.seed + 4);
  for (const auto& q : standard_quotients(rng, 3)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      const std::size_t m = model.coordinate_count();
      for (std::size_t a = 0; a < m; ++a) {
        const std::string at = show(q) + ", coordinate " + std::to_string(a + 1);
        const Rational kappa = opts.pipeline(model, LoopSpec::coordinate(m, a)).kappa;
        AffineForm centered = model.slices[a];
        centered.constant -= kappa;
        c.expect(integrate_affine(model.cells, centered).is_zero(), at + ": mean-zero, kappa = " + kappa.str());
        Rational lo = model.slices[a](model.polytope.vertices.front());
        Rational hi = lo;
        for (const auto& v : model.polytope.vertices) {
          lo = std::min(lo, model.slices[a](v));
          hi = std::max(hi, model.slices[a](v));
        }
        c.expect(lo <= kappa && kappa <= hi, at + ": kappa outside [min, max]");
      }
      for (std::size_t i = 0; i < q.weights.rows(); ++i) {
        AffineForm total{Rational(0), RatVector(model.dimension())};
        for (std::size_t k = 0; k < m; ++k) total = total + Rational(q.weights(i, k)) * model.slices[k];
        c.expect(total.constant == q.level[i] &&
                     std::all_of(total.gradient.begin(), total.gradient.end(),
                                 [](const Rational& x) { return x.is_zero(); }),
                 show(q) + ": sum_k w_k s_k != tau for row " + std::to_string(i + 1));
      }
    });
  }
  return c.finish();
}

SuiteResult suite_coordinate_symmetry(const SelftestOptions& opts) {
  Checker c("coordinate-symmetry");
  Rng rng(opts.seed + 5);
  for (const auto& q : standard_quotients(rng, 0)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      const std::size_t m = model.coordinate_count();
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (q.weights.column(a) != q.weights.column(b)) continue;
          const auto ra = opts.pipeline(model, LoopSpec::coordinate(m, a));
          const auto rb = opts.pipeline(model, LoopSpec::coordinate(m, b));
          const std::string at = show(q) + ", coordinates " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
          c.expect(ra.invariant == rb.invariant && ra.kappa == rb.kappa,
                   at + ": I = " + ra.invariant.str() + " vs " + rb.invariant.str());
          // Swapping z_a and z_b swaps the facets they cut out.
          auto swapped = rb.facet_contributions;
          std::swap(swapped[a], swapped[b]);
          c.expect(ra.facet_contributions == swapped, at + ": facet contributions under the swap");
        }
      }
    });
  }
  return c.finish();
}

SuiteResult suite_apex_independence(const SelftestOptions& opts) {
  Checker c("apex-independence");
  Rng rng(opts.seed + 6);
  for (const auto& q : standard_quotients(rng, 4)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      const auto& p = model.polytope;
      c.expect(volume(p, ApexRule::LowestLex) == volume(p, ApexRule::HighestLex), show(q) + ": volume");
      for (const auto& s : model.slices) {
        c.expect(integrate_affine(p, s, ApexRule::LowestLex) == integrate_affine(p, s, ApexRule::HighestLex),
                 show(q) + ": slice integral");
      }
      const auto low = facets(p, ApexRule::LowestLex);
      const auto high = facets(p, ApexRule::HighestLex);
      for (std::size_t k = 0; k < low.size(); ++k) {
        c.expect(facet_lattice_volume(low[k]) == facet_lattice_volume(high[k]),
                 show(q) + ": facet " + std::to_string(k + 1) + " lattice volume");
        for (const auto& s : model.slices) {
          c.expect(integrate_affine_facet(low[k], s) == integrate_affine_facet(high[k], s),
                   show(q) + ": facet " + std::to_string(k + 1) + " integral");
        }
      }
    });
  }
  return c.finish();
}

SuiteResult suite_report_roundtrip(const SelftestOptions& opts) {
  Checker c("report-roundtrip");
  Rng rng(opts.seed + 7);
  for (const auto& q : standard_quotients(rng, 2)) {
    c.guard(show(q), [&] {
      const auto model = model_of(q);
      std::vector<InvariantReport> loops;
      for (std::size_t a = 0; a < model.coordinate_count(); ++a) {
        loops.push_back(opts.pipeline(model, LoopSpec::coordinate(model.coordinate_count(), a)));
      }
      const ManifoldSpec spec{q.label, q.weights, q.level, {}};
      const auto report = make_report(spec, check_assumptions(q.weights), model, loops);
      const std::string json = to_json(report);
      c.expect(parse_report(json) == report, show(q) + ": parse(to_json(report)) differs");
      c.expect(to_json(make_report(spec, check_assumptions(q.weights), model_of(q), loops)) == json,
               show(q) + ": JSON not deterministic");
    });
  }
  return c.finish();
}

const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites{
      {"oracle-consistency", suite_oracle_consistency}, {"cpn-vanishing", suite_cpn_vanishing},
      {"blowup-grid", suite_blowup_grid},               {"loop-relations", suite_loop_relations},
      {"torus-relations", suite_torus_relations},       {"volume-lasserre", suite_volume_lasserre},
      {"choice-independence", suite_choice_independence}, {"scaling", suite_scaling},
      {"linearity", suite_linearity},                   {"normalization", suite_normalization},
      {"coordinate-symmetry", suite_coordinate_symmetry}, {"apex-independence", suite_apex_independence},
      {"report-roundtrip", suite_report_roundtrip},
  };
  return suites;
}

std::vector<SuiteResult> run_selftests(std::ostream& os, const SelftestOptions& opts) {
  std::vector<SuiteResult> results;
  for (const auto& suite : all_suites()) {
    SuiteResult r;
    try {
      r = suite.run(opts);
    } catch (const std::exception& e) {
      r.name = suite.name;
      r.passed = false;
      r.counterexample = std::string("uncaught exception: ") + e.what();
    }
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << r.seconds;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << timing.str() << " s)\n";
    if (!r.passed) os << "  first counterexample: " << r.counterexample << "\n";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace toricham::app
