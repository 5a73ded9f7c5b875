#pragma once

#include "toricham/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace toricham {

/// ℓ(x) = constant + <gradient, x>.
struct AffineForm {
  Rational constant;
  RatVector gradient;

  Rational operator()(std::span<const Rational> x) const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

AffineForm operator+(const AffineForm& a, const AffineForm& b);
AffineForm operator*(const Rational& s, const AffineForm& a);

/// offset + <normal, x> >= 0. The normal is primitive, or zero for a
/// constant constraint (which must then have offset > 0 to be satisfiable).
struct Inequality {
  IntVector normal;
  Rational offset;

  Rational slack(std::span<const Rational> x) const;
};

/// Bounded H-polytope with its vertices and vertex-facet incidence.
struct Polytope {
  std::size_t dim = 0;
  std::vector<Inequality> inequalities;
  std::vector<RatVector> vertices;  // sorted lexicographically
  /// incidence[v] lists every inequality tight at vertices[v], ascending.
  std::vector<std::vector<std::size_t>> incidence;
};

struct Simplex {
  std::vector<RatVector> vertices;
};

/// Which vertex a face cones from when triangulating.
enum class ApexRule { LowestLex, HighestLex };

struct Facet {
  std::size_t index = 0;              // which inequality
  std::vector<std::size_t> vertices;  // indices into Polytope::vertices
  IntVector normal;
  Integer normal_norm_sq;
  /// False when the inequality touches the polytope in a face of dimension
  /// below n-1 (or not at all); such facets have measure zero.
  bool proper = false;
  std::vector<Simplex> simplices;  // (n-1)-simplices covering the facet
};

struct VertexEnumeration {
  std::vector<RatVector> vertices;
  std::vector<std::vector<std::size_t>> incidence;
};

/// Brute force over all dim-subsets of the inequalities. Throws
/// Error(EmptyPolytope) or Error(UnboundedPolytope); the recession cone
/// test is exact (Fourier–Motzkin).
VertexEnumeration enumerate_vertices(std::span<const Inequality> ineqs, std::size_t dim);

/// Enumerates vertices and packages them. Throws as enumerate_vertices.
Polytope make_polytope(std::size_t dim, std::vector<Inequality> ineqs);

/// Pulling triangulation: cone from the apex vertex over a triangulation of
/// every facet not containing it, recursively. Throws Error(DegenerateInput)
/// unless the polytope is full-dimensional.
std::vector<Simplex> triangulate(const Polytope& p, ApexRule rule = ApexRule::LowestLex);

/// Euclidean volume of an n-simplex in R^n.
Rational simplex_volume(const Simplex& s);

Rational volume(const Polytope& p, ApexRule rule = ApexRule::LowestLex);
Rational volume(std::span<const Simplex> cells);

/// ∫_P ℓ dx, exact for affine ℓ.
Rational integrate_affine(const Polytope& p, const AffineForm& form, ApexRule rule = ApexRule::LowestLex);
Rational integrate_affine(std::span<const Simplex> cells, const AffineForm& form);

/// Facet of inequality `index` with its own triangulation.
Facet make_facet(const Polytope& p, std::size_t index, ApexRule rule = ApexRule::LowestLex);
std::vector<Facet> facets(const Polytope& p, ApexRule rule = ApexRule::LowestLex);

/// Lattice-normalized (n-1)-volume of a simplex lying in the hyperplane with
/// primitive normal u: |det[E | u]| / ((n-1)! <u,u>).
Rational facet_simplex_lattice_volume(const Simplex& s, std::span<const Integer> normal);

/// Lattice-normalized volume of a facet; 0 for improper facets.
Rational facet_lattice_volume(const Facet& f);

/// ∫_F ℓ dm_lattice; 0 for improper facets.
Rational integrate_affine_facet(const Facet& f, const AffineForm& form);

/// Volume by Lasserre's recursion over facets, with lattice-normalized facet
/// volumes computed in unimodular hyperplane coordinates. Shares no code
/// with the triangulation path.
Rational lasserre_volume(const Polytope& p);

/// Same recursion for a raw system <a_k, x> <= b_k. Must describe a bounded
/// set; lower-dimensional and empty sets give 0.
Rational lasserre_volume(std::size_t dim, std::span<const IntVector> normals, std::span<const Rational> bounds);

}  // namespace toricham
