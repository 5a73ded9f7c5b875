#include "toricham/polytope.hpp"

#include "toricham/error.hpp"
#include "toricham/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace toricham {

Rational AffineForm::operator()(std::span<const Rational> x) const {
  return constant + dot(std::span<const Rational>(gradient), x);
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  if (a.gradient.size() != b.gradient.size()) {
    throw Error(ErrorCode::DimensionMismatch, "adding affine forms of different dimension");
  }
  AffineForm out{a.constant + b.constant, a.gradient};
  for (std::size_t i = 0; i < out.gradient.size(); ++i) out.gradient[i] += b.gradient[i];
  return out;
}

AffineForm operator*(const Rational& s, const AffineForm& a) {
  AffineForm out{s * a.constant, a.gradient};
  for (auto& g : out.gradient) g *= s;
  return out;
}

Rational Inequality::slack(std::span<const Rational> x) const {
  return offset + dot(std::span<const Integer>(normal), x);
}

namespace {

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Advances a sorted k-subset of {0..n-1}; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_bounded(std::span<const Inequality> ineqs, std::size_t dim) {
  std::vector<const Inequality*> active;
  for (const auto& q : ineqs) {
    if (!is_zero(q.normal)) active.push_back(&q);
  }
  RatMatrix normals(active.size(), dim);
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) normals(i, j) = Rational(active[i]->normal[j]);
  if (rank(normals) < dim) {
    throw Error(ErrorCode::UnboundedPolytope, "polytope contains a line (normals do not span)");
  }
  // With full-rank normals a nonzero recession direction y has N·y >= 0 and
  // N·y != 0, so after scaling sum(N·y) >= 1.
  std::vector<LinearConstraint> cone;
  LinearConstraint total{RatVector(dim), Rational(-1)};
  for (std::size_t i = 0; i < active.size(); ++i) {
    LinearConstraint c{RatVector(dim), Rational(0)};
    for (std::size_t j = 0; j < dim; ++j) {
      c.coeffs[j] = normals(i, j);
      total.coeffs[j] += normals(i, j);
    }
    cone.push_back(std::move(c));
  }
  cone.push_back(std::move(total));
  if (is_feasible(std::move(cone), dim)) {
    throw Error(ErrorCode::UnboundedPolytope, "polytope has a nonzero recession direction");
  }
}

using IndexSet = std::vector<std::size_t>;

std::vector<RatVector> points_of(const Polytope& p, const IndexSet& idx) {
  std::vector<RatVector> pts;
  pts.reserve(idx.size());
  for (auto i : idx) pts.push_back(p.vertices[i]);
  return pts;
}

bool tight_at(const Polytope& p, std::size_t vertex, std::size_t ineq) {
  const auto& inc = p.incidence[vertex];
  return std::binary_search(inc.begin(), inc.end(), ineq);
}

// Appends simplices (as vertex index lists) triangulating the face spanned
// by `face`, which has affine dimension face_dim, each prefixed by `apexes`.
void triangulate_face(const Polytope& p, const IndexSet& face, int face_dim, ApexRule rule,
                      IndexSet& apexes, std::vector<IndexSet>& out) {
  if (face_dim == 0) {
    IndexSet s = apexes;
    s.push_back(face.front());
    out.push_back(std::move(s));
    return;
  }
  // Vertices are sorted lexicographically, so index order is lex order.
  const std::size_t apex =
      rule == ApexRule::LowestLex ? *std::min_element(face.begin(), face.end())
                                  : *std::max_element(face.begin(), face.end());
  std::set<IndexSet> subfacets;
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
    IndexSet g;
    for (auto v : face) {
      if (tight_at(p, v, k)) g.push_back(v);
    }
    if (g.size() == face.size() || g.size() < static_cast<std::size_t>(face_dim)) continue;
    if (std::binary_search(g.begin(), g.end(), apex)) continue;
    const auto pts = points_of(p, g);
    if (affine_dimension(pts) == face_dim - 1) subfacets.insert(std::move(g));
  }
  apexes.push_back(apex);
  for (const auto& g : subfacets) triangulate_face(p, g, face_dim - 1, rule, apexes, out);
  apexes.pop_back();
}

std::vector<Simplex> to_simplices(const Polytope& p, const std::vector<IndexSet>& cells) {
  std::vector<Simplex> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(Simplex{points_of(p, c)});
  return out;
}

Rational mean_value(const Simplex& s, const AffineForm& form) {
  Rational sum;
  for (const auto& v : s.vertices) sum += form(v);
  return sum / Rational(static_cast<long>(s.vertices.size()));
}

}  // namespace

VertexEnumeration enumerate_vertices(std::span<const Inequality> ineqs, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DegenerateInput, "polytope of dimension 0");
  for (const auto& q : ineqs) {
    if (q.normal.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "inequality normal has the wrong length");
    }
  }

  std::vector<LinearConstraint> system;
  for (const auto& q : ineqs) {
    LinearConstraint c{RatVector(dim), q.offset};
    for (std::size_t j = 0; j < dim; ++j) c.coeffs[j] = Rational(q.normal[j]);
    system.push_back(std::move(c));
  }
  if (!is_feasible(std::move(system), dim)) {
    throw Error(ErrorCode::EmptyPolytope, "the inequalities have no common solution");
  }
  check_bounded(ineqs, dim);

  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    if (!is_zero(ineqs[k].normal)) candidates.push_back(k);
  }
  std::set<RatVector> found;
  if (candidates.size() >= dim) {
    std::vector<std::size_t> pick(dim);
    for (std::size_t i = 0; i < dim; ++i) pick[i] = i;
    do {
      RatMatrix a(dim, dim);
      RatVector b(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        const auto& q = ineqs[candidates[pick[i]]];
        for (std::size_t j = 0; j < dim; ++j) a(i, j) = Rational(q.normal[j]);
        b[i] = -q.offset;
      }
      auto x = solve_square(a, b);
      if (!x) continue;
      const bool inside = std::all_of(ineqs.begin(), ineqs.end(),
                                      [&](const Inequality& q) { return q.slack(*x).sign() >= 0; });
      if (inside) found.insert(std::move(*x));
    } while (next_combination(pick, candidates.size()));
  }
  if (found.empty()) throw Error(ErrorCode::EmptyPolytope, "no vertices found");

  VertexEnumeration out;
  out.vertices.assign(found.begin(), found.end());
  for (const auto& v : out.vertices) {
    std::vector<std::size_t> tight;
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      if (ineqs[k].slack(v).is_zero()) tight.push_back(k);
    }
    out.incidence.push_back(std::move(tight));
  }
  return out;
}

Polytope make_polytope(std::size_t dim, std::vector<Inequality> ineqs) {
  auto enumeration = enumerate_vertices(ineqs, dim);
  return Polytope{dim, std::move(ineqs), std::move(enumeration.vertices), std::move(enumeration.incidence)};
}

std::vector<Simplex> triangulate(const Polytope& p, ApexRule rule) {
  if (affine_dimension(p.vertices) != static_cast<int>(p.dim)) {
    throw Error(ErrorCode::DegenerateInput, "triangulate needs a full-dimensional polytope");
  }
  IndexSet all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  IndexSet apexes;
  std::vector<IndexSet> cells;
  triangulate_face(p, all, static_cast<int>(p.dim), rule, apexes, cells);
  return to_simplices(p, cells);
}

Rational simplex_volume(const Simplex& s) {
  const std::size_t n = s.vertices.size() - 1;
  RatMatrix edges(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) edges(i, j) = s.vertices[i + 1][j] - s.vertices[0][j];
  return abs(determinant(edges)) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational volume(std::span<const Simplex> cells) {
  Rational total;
  for (const auto& c : cells) total += simplex_volume(c);
  return total;
}

Rational volume(const Polytope& p, ApexRule rule) { return volume(triangulate(p, rule)); }

Rational integrate_affine(std::span<const Simplex> cells, const AffineForm& form) {
  Rational total;
  for (const auto& c : cells) total += simplex_volume(c) * mean_value(c, form);
  return total;
}

Rational integrate_affine(const Polytope& p, const AffineForm& form, ApexRule rule) {
  return integrate_affine(triangulate(p, rule), form);
}

Facet make_facet(const Polytope& p, std::size_t index, ApexRule rule) {
  if (index >= p.inequalities.size()) {
    throw Error(ErrorCode::InvalidArgument, "facet index out of range");
  }
  const auto& q = p.inequalities[index];
  Facet f;
  f.index = index;
  f.normal = q.normal;
  f.normal_norm_sq = dot(std::span<const Integer>(q.normal), std::span<const Integer>(q.normal));
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    if (tight_at(p, v, index)) f.vertices.push_back(v);
  }
  const int face_dim = static_cast<int>(p.dim) - 1;
  f.proper = f.normal_norm_sq != 0 && affine_dimension(points_of(p, f.vertices)) == face_dim;
  if (f.proper) {
    IndexSet apexes;
    std::vector<IndexSet> cells;
    triangulate_face(p, f.vertices, face_dim, rule, apexes, cells);
    f.simplices = to_simplices(p, cells);
  }
  return f;
}

std::vector<Facet> facets(const Polytope& p, ApexRule rule) {
  std::vector<Facet> out;
  out.reserve(p.inequalities.size());
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) out.push_back(make_facet(p, k, rule));
  return out;
}

Rational facet_simplex_lattice_volume(const Simplex& s, std::span<const Integer> normal) {
  const std::size_t n = normal.size();
  if (s.vertices.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "facet simplex must have n vertices");
  }
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 1; e < n; ++e) m(i, e - 1) = s.vertices[e][i] - s.vertices[0][i];
    m(i, n - 1) = Rational(normal[i]);
  }
  const Integer norm_sq = dot(normal, normal);
  return abs(determinant(m)) / (Rational(factorial(static_cast<unsigned>(n - 1))) * Rational(norm_sq));
}

Rational facet_lattice_volume(const Facet& f) {
  Rational total;
  for (const auto& s : f.simplices) total += facet_simplex_lattice_volume(s, f.normal);
  return total;
}

Rational integrate_affine_facet(const Facet& f, const AffineForm& form) {
  Rational total;
  for (const auto& s : f.simplices) {
    total += facet_simplex_lattice_volume(s, f.normal) * mean_value(s, form);
  }
  return total;
}

}  // namespace toricham
