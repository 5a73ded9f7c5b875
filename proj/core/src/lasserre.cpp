#include "toricham/error.hpp"
#include "toricham/polytope.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace toricham {
namespace {

struct HalfSpace {
  IntVector normal;  // <normal, x> <= bound
  Rational bound;

  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

// Makes normals primitive, drops trivially satisfied constant constraints and
// exact duplicates. Returns nullopt when a constant constraint is violated.
std::optional<std::vector<HalfSpace>> normalize(std::vector<HalfSpace> system) {
  std::set<HalfSpace> unique;
  for (auto& h : system) {
    const bool zero = std::all_of(h.normal.begin(), h.normal.end(), [](const Integer& x) { return x == 0; });
    if (zero) {
      if (h.bound.sign() < 0) return std::nullopt;
      continue;
    }
    auto prim = primitive(h.normal);
    unique.insert({std::move(prim.vector), h.bound / Rational(prim.scale)});
  }
  return std::vector<HalfSpace>(unique.begin(), unique.end());
}

Rational interval_length(const std::vector<HalfSpace>& system) {
  std::optional<Rational> lo, hi;
  for (const auto& h : system) {
    const Rational edge = h.bound / Rational(h.normal[0]);
    if (h.normal[0] > 0) {
      if (!hi || edge < *hi) hi = edge;
    } else {
      if (!lo || edge > *lo) lo = edge;
    }
  }
  if (!lo || !hi) throw Error(ErrorCode::UnboundedPolytope, "unbounded interval in volume recursion");
  return *hi > *lo ? *hi - *lo : Rational(0);
}

Rational recurse(std::size_t dim, std::vector<HalfSpace> raw) {
  auto system = normalize(std::move(raw));
  if (!system) return Rational(0);
  if (dim == 1) return interval_length(*system);

  Rational sum;
  for (std::size_t k = 0; k < system->size(); ++k) {
    const auto& facet = (*system)[k];
    if (facet.bound.is_zero()) continue;

    // Unimodular coordinates y on the hyperplane: x = origin + basis·y, so
    // Lebesgue measure in y is the lattice-normalized facet measure.
    IntMatrix row(1, dim);
    for (std::size_t j = 0; j < dim; ++j) row(0, j) = facet.normal[j];
    const IntMatrix basis = integer_kernel(row);
    const Integer norm_sq = dot(std::span<const Integer>(facet.normal), std::span<const Integer>(facet.normal));
    const Rational t = facet.bound / Rational(norm_sq);
    RatVector origin(dim);
    for (std::size_t j = 0; j < dim; ++j) origin[j] = t * Rational(facet.normal[j]);

    std::vector<HalfSpace> restricted;
    restricted.reserve(system->size() - 1);
    for (std::size_t j = 0; j < system->size(); ++j) {
      if (j == k) continue;
      const auto& h = (*system)[j];
      HalfSpace r{IntVector(dim - 1), h.bound - dot(std::span<const Integer>(h.normal), origin)};
      for (std::size_t c = 0; c + 1 < dim; ++c) {
        for (std::size_t i = 0; i < dim; ++i) r.normal[c] += h.normal[i] * basis(i, c);
      }
      restricted.push_back(std::move(r));
    }
    sum += facet.bound * recurse(dim - 1, std::move(restricted));
  }
  return sum / Rational(static_cast<long>(dim));
}

}  // namespace

Rational lasserre_volume(std::size_t dim, std::span<const IntVector> normals, std::span<const Rational> bounds) {
  if (normals.size() != bounds.size()) {
    throw Error(ErrorCode::DimensionMismatch, "normals and bounds differ in length");
  }
  if (dim == 0) throw Error(ErrorCode::DegenerateInput, "volume in dimension 0");
  std::vector<HalfSpace> system;
  system.reserve(normals.size());
  for (std::size_t k = 0; k < normals.size(); ++k) {
    if (normals[k].size() != dim) throw Error(ErrorCode::DimensionMismatch, "normal has the wrong length");
    system.push_back({normals[k], bounds[k]});
  }
  return recurse(dim, std::move(system));
}

Rational lasserre_volume(const Polytope& p) {
  // offset + <u, x> >= 0  <=>  <-u, x> <= offset
  std::vector<IntVector> normals;
  std::vector<Rational> bounds;
  for (const auto& q : p.inequalities) {
    IntVector a(q.normal.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = -q.normal[j];
    normals.push_back(std::move(a));
    bounds.push_back(q.offset);
  }
  return lasserre_volume(p.dim, normals, bounds);
}

}  // namespace toricham
