#include "toricham/delzant.hpp"

#include "toricham/error.hpp"
#include "toricham/fourier_motzkin.hpp"

#include <algorithm>

namespace toricham {
namespace {

std::string coordinate_name(std::size_t k) { return "z_" + std::to_string(k + 1); }

// True when the columns of q generate the same lattice as those of k.
bool same_lattice(const IntMatrix& k, const IntMatrix& q) {
  if (k.rows() != q.rows() || k.cols() != q.cols()) return false;
  const std::size_t n = k.cols();
  if (n == 0) return true;
  const RatMatrix kr = to_rational(k);
  const RatMatrix kt = kr.transposed();
  const RatMatrix gram = multiply(kt, kr);
  const RatMatrix rhs = multiply(kt, to_rational(q));
  IntMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto col = solve_square(gram, rhs.column(c));
    if (!col) return false;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(*col)[r].is_integer()) return false;
      u(r, c) = (*col)[r].numerator();
    }
  }
  return multiply(k, u) == q && is_unimodular(u);
}

void require_assumptions(const IntMatrix& weights) {
  const auto report = check_assumptions(weights);
  if (report.ok()) return;
  std::string message;
  for (const auto& v : report.violations()) {
    if (!message.empty()) message += "; ";
    message += v;
  }
  throw Error(ErrorCode::AssumptionViolated, message);
}

}  // namespace

std::vector<std::string> AssumptionReport::violations() const {
  std::vector<std::string> out;
  if (!rank_ok) {
    out.push_back("spanning assumption violated: the weights w_j span a space of dimension " +
                  std::to_string(rank) + " < r = " + std::to_string(rows));
  }
  if (!half_space_ok) {
    out.push_back("half-space assumption violated: no open half space contains every weight w_j");
  }
  return out;
}

AssumptionReport check_assumptions(const IntMatrix& weights) {
  AssumptionReport report;
  report.rows = weights.rows();
  report.rank = rank(weights);
  report.rank_ok = weights.rows() >= 1 && report.rank == weights.rows();

  // <w_j, xi> > 0 for all j.
  std::vector<LinearConstraint> system;
  for (std::size_t j = 0; j < weights.cols(); ++j) {
    LinearConstraint c{RatVector(weights.rows()), Rational(0), true};
    for (std::size_t i = 0; i < weights.rows(); ++i) c.coeffs[i] = Rational(weights(i, j));
    system.push_back(std::move(c));
  }
  report.half_space_witness = find_feasible_point(std::move(system), weights.rows());
  report.half_space_ok = report.half_space_witness.has_value();
  return report;
}

std::string_view to_string(SmoothnessClass c) {
  switch (c) {
    case SmoothnessClass::Delzant: return "delzant";
    case SmoothnessClass::SimpleOnly: return "simple-only";
    case SmoothnessClass::NonSimple: return "non-simple";
  }
  return "unknown";
}

SmoothnessClass smoothness_class(const Polytope& p) {
  bool unimodular = true;
  for (const auto& tight : p.incidence) {
    if (tight.size() != p.dim) return SmoothnessClass::NonSimple;
    IntMatrix normals(p.dim, p.dim);
    for (std::size_t i = 0; i < p.dim; ++i)
      for (std::size_t j = 0; j < p.dim; ++j) normals(i, j) = p.inequalities[tight[i]].normal[j];
    unimodular = unimodular && is_unimodular(normals);
  }
  return unimodular ? SmoothnessClass::Delzant : SmoothnessClass::SimpleOnly;
}

DelzantModel build_model(const IntMatrix& weights, const RatVector& level, const IntMatrix& kernel,
                         const RatVector& particular) {
  require_assumptions(weights);
  const std::size_t m = weights.cols();
  if (level.size() != weights.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "level has " + std::to_string(level.size()) +
                                                  " entries but W has " + std::to_string(weights.rows()) + " rows");
  }
  if (multiply(weights, std::span<const Rational>(particular)) != level) {
    throw Error(ErrorCode::InvalidArgument, "particular solution does not satisfy W·s0 = tau");
  }
  if (!same_lattice(integer_kernel(weights), kernel)) {
    throw Error(ErrorCode::InvalidArgument, "kernel basis does not generate the saturated kernel of W");
  }
  const std::size_t n = kernel.cols();
  if (n == 0) throw Error(ErrorCode::DegenerateInput, "m == r: the quotient is a point");

  DelzantModel model;
  model.weights = weights;
  model.level = level;
  model.kernel = kernel;
  model.particular = particular;

  std::vector<Inequality> ineqs;
  for (std::size_t k = 0; k < m; ++k) {
    AffineForm slice{particular[k], RatVector(n)};
    for (std::size_t j = 0; j < n; ++j) slice.gradient[j] = Rational(kernel(k, j));
    model.slices.push_back(std::move(slice));

    const auto row = kernel.row(k);
    if (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; })) {
      ineqs.push_back({IntVector(n), particular[k]});
      model.normal_scales.emplace_back(0);
      if (particular[k].sign() < 0) {
        throw Error(ErrorCode::EmptyPolytope, "moment coordinate of " + coordinate_name(k) +
                                                  " is the negative constant " + particular[k].str());
      }
      if (particular[k].is_zero()) {
        throw Error(ErrorCode::NotFullDimensional, "moment coordinate of " + coordinate_name(k) +
                                                       " vanishes identically: tau is not a regular value");
      }
      continue;
    }
    auto prim = primitive(row);
    ineqs.push_back({std::move(prim.vector), particular[k] / Rational(prim.scale)});
    model.normal_scales.push_back(std::move(prim.scale));
  }

  model.polytope = make_polytope(n, std::move(ineqs));
  if (affine_dimension(model.polytope.vertices) != static_cast<int>(n)) {
    throw Error(ErrorCode::NotFullDimensional,
                "moment polytope is not full-dimensional: tau is not a regular value");
  }
  model.cells = triangulate(model.polytope);
  model.facets = facets(model.polytope);
  model.volume = volume(model.cells);
  model.smoothness = smoothness_class(model.polytope);

  if (model.smoothness != SmoothnessClass::Delzant) {
    model.warnings.push_back("polytope is " + std::string(to_string(model.smoothness)) +
                             ", not Delzant: the quotient is not smooth and results are polytope-level");
  }
  for (const auto& f : model.facets) {
    if (!f.proper) {
      model.warnings.push_back("slice of " + coordinate_name(f.index) +
                               " is never a facet of the polytope; its contribution is 0");
    }
  }
  return model;
}

DelzantModel build_model(const IntMatrix& weights, const RatVector& level) {
  require_assumptions(weights);
  const IntMatrix kernel = integer_kernel(weights);
  const RatVector particular = solve_rational(weights, level);
  const DelzantModel first = build_model(weights, level, kernel, particular);

  // Re-anchor s0 at the vertex with lexicographically smallest slice values.
  std::optional<RatVector> anchor_values;
  for (const auto& v : first.polytope.vertices) {
    RatVector values;
    values.reserve(first.slices.size());
    for (const auto& s : first.slices) values.push_back(s(v));
    if (!anchor_values || values < *anchor_values) anchor_values = std::move(values);
  }
  if (*anchor_values == particular) return first;
  return build_model(weights, level, kernel, *anchor_values);
}

}  // namespace toricham
