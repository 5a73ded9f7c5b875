#include "toricham/app/commands.hpp"

#include "toricham/app/report.hpp"
#include "toricham/app/spec_file.hpp"
#include "toricham/error.hpp"
#include "toricham/oracles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace toricham::app {
namespace {

namespace orc = toricham::oracles;

int exit_code_for(const Error& e) { return is_validation_failure(e.code()) ? ValidationFailure : InputError; }

void report_error(std::ostream& err, const Error& e) {
  err << (is_validation_failure(e.code()) ? "validation failure" : "input error") << " (" << to_string(e.code())
      << "): " << e.what() << "\n";
}

LoopSpec parse_loop_weights(const std::string& text, std::size_t m) {
  LoopSpec loop;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) loop.weights.push_back(parse_integer(item));
  if (loop.weights.size() != m) {
    throw Error(ErrorCode::ParseError, "--loop-weights " + text + ": expected " + std::to_string(m) +
                                           " comma-separated integers, got " + std::to_string(loop.weights.size()));
  }
  return loop;
}

// Explicit flags win; without any, the file's loops, else every coordinate loop.
std::vector<LoopSpec> select_loops(const ManifoldSpec& spec, const ComputeOptions& options) {
  const std::size_t m = spec.weights.cols();
  std::vector<LoopSpec> loops;
  const bool explicit_choice = options.all || !options.loop_indices.empty() || !options.loop_weights.empty();
  if (options.all || (!explicit_choice && spec.loops.empty())) {
    for (std::size_t a = 0; a < m; ++a) loops.push_back(LoopSpec::coordinate(m, a));
  }
  for (std::size_t a : options.loop_indices) {
    if (a < 1 || a > m) {
      throw Error(ErrorCode::ParseError,
                  "--loop-index " + std::to_string(a) + ": expected 1.." + std::to_string(m));
    }
    loops.push_back(LoopSpec::coordinate(m, a - 1));
  }
  for (const auto& w : options.loop_weights) loops.push_back(parse_loop_weights(w, m));
  if (!explicit_choice) loops.insert(loops.end(), spec.loops.begin(), spec.loops.end());
  return loops;
}

void print_list(std::ostream& out, const char* label, const std::vector<Rational>& values) {
  out << label;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? ", " : " ") << values[k];
  out << "\n";
}

}  // namespace

int run_compute(const std::string& path, const ComputeOptions& options, std::ostream& out, std::ostream& err) {
  ManifoldSpec spec;
  std::vector<LoopSpec> loops;
  try {
    spec = load_manifold_spec(path);
    loops = select_loops(spec, options);
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e);
  }

  const auto assumptions = check_assumptions(spec.weights);
  if (!assumptions.ok()) {
    for (const auto& v : assumptions.violations()) err << "validation failure: " << v << "\n";
    return ValidationFailure;
  }

  try {
    const auto model = build_model(spec.weights, spec.tau);
    std::vector<InvariantReport> results;
    for (const auto& loop : loops) results.push_back(invariant_loop(model, loop));
    const auto report = make_report(spec, assumptions, model, results);
    print_text(out, report);
    if (options.json_path) {
      const std::string json = to_json(report);
      if (*options.json_path == "-") {
        out << json;
      } else {
        std::ofstream file(*options.json_path, std::ios::binary);
        if (!(file << json)) {
          err << "input error: cannot write " << *options.json_path << "\n";
          return InputError;
        }
      }
    }
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
  return Success;
}

int run_selftest(std::ostream& out, const SelftestOptions& options) {
  const auto results = run_selftests(out, options);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  out << (failed == 0 ? "selftest: all " + std::to_string(results.size()) + " suites passed\n"
                      : "selftest: " + std::to_string(failed) + " of " + std::to_string(results.size()) +
                            " suites failed\n");
  return failed == 0 ? Success : InputError;
}

int run_oracle_blowup(const std::string& tau, const std::string& mu, std::ostream& out, std::ostream& err) {
  try {
    const orc::BlowupParams p(Rational::parse(tau), Rational::parse(mu));
    out << "blow-up of CP^3: tau = " << p.tau() << ", mu = " << p.mu() << ", lambda = " << p.lambda() << "\n";
    out << "kappa   = " << orc::kappa(p) << "\n";
    out << "kappa~  = " << orc::kappa_tilde(p) << "\n";
    out << "kappa^  = " << orc::kappa_hat(p) << "\n";
    out << "I_psi   = " << orc::invariant(p) << "\n";
    out << "I_psi~  = " << orc::invariant_tilde(p) << "\n";
    out << "I_psi^  = " << orc::invariant_hat(p) << "\n";
    print_list(out, "facets psi: ", orc::facet_values(p, orc::BlowupLoop::Psi));
    print_list(out, "facets psi~:", orc::facet_values(p, orc::BlowupLoop::PsiTilde));
    print_list(out, "facets psi^:", orc::facet_values(p, orc::BlowupLoop::PsiHat));
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
  return Success;
}

int run_oracle_cpn(const std::string& n, const std::string& tau, std::ostream& out, std::ostream& err) {
  try {
    const Integer parsed = parse_integer(n);
    if (parsed < 1 || parsed > 64) throw Error(ErrorCode::BadParams, "1 <= n <= 64 required (got n = " + n + ")");
    const auto dim = static_cast<unsigned>(parsed.get_ui());
    const auto values = orc::cpn_values(dim, Rational::parse(tau));
    out << "CP^" << dim << ": tau = " << Rational::parse(tau) << "\n";
    out << "kappa = " << values.kappa << "\n";
    out << "I     = " << values.invariant << "\n";
    print_list(out, "facets:", values.facets);
  } catch (const Error& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
  return Success;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic numbers of Hamiltonian loops on toric manifolds", "toricham"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Build the moment polytope of a manifold file and evaluate loops");
  std::string path;
  ComputeOptions options;
  std::string json_path;
  compute->add_option("file", path, "Manifold description (JSON)")->required();
  compute->add_option("--loop-index", options.loop_indices, "Coordinate loop e_a, 1-based (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  compute->add_option("--loop-weights", options.loop_weights, "Loop weights c1,...,cm (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  compute->add_flag("--all", options.all, "Every coordinate loop");
  compute->add_option("--json", json_path, "Write the JSON report to a file, or '-' for standard output");

  auto* selftest = app.add_subcommand("selftest", "Run the oracle comparisons and property suites");

  auto* oracle = app.add_subcommand("oracle", "Print closed-form oracle values");
  oracle->require_subcommand(1);
  auto* blowup = oracle->add_subcommand("blowup-cp3", "Blow-up of CP^3 with parameters tau > mu > 0");
  std::string tau;
  std::string mu;
  blowup->add_option("--tau", tau, "p/q")->required();
  blowup->add_option("--mu", mu, "p/q")->required();
  auto* cpn = oracle->add_subcommand("cpn", "CP^n with level tau");
  std::string n;
  std::string cpn_tau;
  cpn->add_option("--n", n, "Dimension n >= 1")->required();
  cpn->add_option("--tau", cpn_tau, "p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return InputError;
  }

  if (compute->parsed()) {
    if (compute->count("--json") > 0) options.json_path = json_path;
    return run_compute(path, options, out, err);
  }
  if (selftest->parsed()) return run_selftest(out);
  if (blowup->parsed()) return run_oracle_blowup(tau, mu, out, err);
  if (cpn->parsed()) return run_oracle_cpn(n, cpn_tau, out, err);
  return InputError;
}

}  // namespace toricham::app
