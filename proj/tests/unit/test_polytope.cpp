#include "toricham/error.hpp"
#include "toricham/polytope.hpp"

#include "ehrhart.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace toricham;
using check::Rng;

namespace {

Polytope from_rows(std::size_t dim, const std::vector<std::pair<IntVector, Rational>>& rows) {
  std::vector<Inequality> ineqs;
  for (const auto& [normal, offset] : rows) ineqs.push_back({normal, offset});
  return make_polytope(dim, std::move(ineqs));
}

Polytope cp2_triangle(const Rational& tau) {
  return from_rows(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, tau}});
}

// Slices x1, x2, x3, mu - x3, tau - x1 - x2 - x3.
Polytope blowup(const Rational& tau, const Rational& mu) {
  return from_rows(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{0, 0, -1}, mu}, {{-1, -1, -1}, tau}});
}

Polytope unit_cube(std::size_t n) {
  std::vector<std::pair<IntVector, Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    rows.emplace_back(e, 0);
    e[i] = -1;
    rows.emplace_back(e, 1);
  }
  return from_rows(n, rows);
}

// Square base [-1,1]^2 at x3 = 0, apex (0,0,1): the apex lies on four facets.
Polytope square_pyramid() {
  return from_rows(3, {{{0, 0, 1}, 0}, {{-1, 0, -1}, 1}, {{1, 0, -1}, 1}, {{0, -1, -1}, 1}, {{0, 1, -1}, 1}});
}

AffineForm coordinate(std::size_t n, std::size_t i) {
  AffineForm f{Rational(0), RatVector(n)};
  f.gradient[i] = 1;
  return f;
}

AffineForm constant(std::size_t n, const Rational& c) { return {c, RatVector(n)}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

// Random full-dimensional polytope: a simplex around the origin cut by a few
// extra half-spaces, all offsets positive.
Polytope random_polytope(Rng& rng, std::size_t n, std::size_t extra) {
  std::vector<Inequality> ineqs;
  IntMatrix head(n, n);
  do {
    head = check::random_int_matrix(rng, n, n, 2);
  } while (determinant(head) == 0);
  IntVector last(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row(head.row(i).begin(), head.row(i).end());
    for (std::size_t j = 0; j < n; ++j) last[j] -= row[j];
    ineqs.push_back({row, Rational(Integer(check::uniform(rng, 1, 6)), Integer(check::uniform(rng, 1, 3)))});
  }
  ineqs.push_back({last, Rational(check::uniform(rng, 1, 4))});
  for (std::size_t k = 0; k < extra; ++k) {
    IntVector row(n);
    do {
      for (auto& x : row) x = check::uniform(rng, -2, 2);
    } while (std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; }));
    ineqs.push_back({row, Rational(Integer(check::uniform(rng, 1, 6)), Integer(check::uniform(rng, 1, 2)))});
  }
  for (auto& q : ineqs) {
    const auto p = primitive(q.normal);
    q.normal = p.vector;
    q.offset /= Rational(p.scale);
  }
  return make_polytope(n, std::move(ineqs));
}

Integer vertex_denominator_lcm(const Polytope& p) {
  Integer l = 1;
  for (const auto& v : p.vertices)
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

AffineForm random_form(Rng& rng, std::size_t n) {
  return {check::random_rational(rng), check::random_rational_vector(rng, n)};
}

// g(x / D): its integral over D·P is D^n times the integral of g over P.
AffineForm undilate(const AffineForm& g, const Integer& d) {
  AffineForm out = g;
  for (auto& a : out.gradient) a /= Rational(d);
  return out;
}

}  // namespace

TEST(Vertices, StandardTriangle) {
  const auto p = cp2_triangle(1);
  EXPECT_EQ(p.vertices, (std::vector<RatVector>{{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Vertices, TruncatedTetrahedronHasSixVertices) {
  const auto p = blowup(2, 1);
  EXPECT_EQ(p.vertices,
            (std::vector<RatVector>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {2, 0, 0}}));
}

TEST(Vertices, IncidenceListsEveryTightInequality) {
  const auto p = square_pyramid();
  ASSERT_EQ(p.vertices.size(), 5u);
  const auto apex = std::find(p.vertices.begin(), p.vertices.end(), RatVector{0, 0, 1});
  ASSERT_NE(apex, p.vertices.end());
  EXPECT_EQ(p.incidence[apex - p.vertices.begin()], (std::vector<std::size_t>{1, 2, 3, 4}));
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
      const Rational slack = p.inequalities[k].slack(p.vertices[v]);
      EXPECT_GE(slack, Rational(0));
      const bool listed = std::binary_search(p.incidence[v].begin(), p.incidence[v].end(), k);
      EXPECT_EQ(slack.is_zero(), listed);
    }
  }
}

TEST(Vertices, Errors) {
  EXPECT_EQ(code_of([] { (void)from_rows(1, {{{1}, 0}}); }), ErrorCode::UnboundedPolytope);
  EXPECT_EQ(code_of([] { (void)from_rows(1, {{{1}, -1}, {{-1}, 0}}); }), ErrorCode::EmptyPolytope);
  EXPECT_EQ(code_of([] { (void)from_rows(2, {{{1, 0}, 0}, {{-1, 0}, 1}}); }), ErrorCode::UnboundedPolytope);
  EXPECT_EQ(code_of([] { (void)enumerate_vertices(std::vector<Inequality>{}, 0); }), ErrorCode::DegenerateInput);
}

TEST(Triangulation, Examples) {
  EXPECT_EQ(triangulate(cp2_triangle(1)).size(), 1u);
  const auto square = triangulate(unit_cube(2));
  EXPECT_EQ(square.size(), 2u);
  EXPECT_EQ(volume(square), Rational(1));
  EXPECT_EQ(volume(std::span<const Simplex>(triangulate(blowup(2, 1)))), Rational(7, 6));
}

TEST(Triangulation, RejectsLowerDimensionalPolytopes) {
  const auto flat = from_rows(2, {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 1}});
  EXPECT_EQ(code_of([&] { (void)triangulate(flat); }), ErrorCode::DegenerateInput);
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(cp2_triangle(1)), Rational(1, 2));
  EXPECT_EQ(volume(blowup(2, 1)), Rational(7, 6));
  EXPECT_EQ(Rational(6) * volume(blowup(2, 1)), Rational(7));
  EXPECT_EQ(volume(from_rows(1, {{{1}, 0}, {{-1}, Rational(5, 2)}})), Rational(5, 2));
  EXPECT_EQ(volume(unit_cube(4)), Rational(1));
  EXPECT_EQ(volume(square_pyramid()), Rational(4, 3));
}

TEST(IntegrateAffine, Examples) {
  EXPECT_EQ(integrate_affine(blowup(2, 1), constant(3, 1)), Rational(7, 6));
  EXPECT_EQ(integrate_affine(cp2_triangle(1), coordinate(2, 0)), Rational(1, 6));
  EXPECT_EQ(integrate_affine(blowup(2, 1), coordinate(3, 0)), Rational(5, 8));
  EXPECT_EQ(Rational(6) * integrate_affine(blowup(2, 1), coordinate(3, 0)), Rational(15, 4));
}

TEST(FacetVolume, BlowupFacets) {
  const auto fs = facets(blowup(2, 1));
  ASSERT_EQ(fs.size(), 5u);
  EXPECT_EQ(facet_lattice_volume(fs[2]), Rational(2));
  EXPECT_EQ(facet_lattice_volume(fs[4]), Rational(3, 2));
  EXPECT_EQ(facet_lattice_volume(fs[3]), Rational(1, 2));
  EXPECT_EQ(facet_lattice_volume(fs[0]), Rational(3, 2));
  EXPECT_EQ(fs[4].normal_norm_sq, 3);
}

TEST(FacetIntegral, BlowupFacets) {
  const auto fs = facets(blowup(2, 1));
  const auto x1 = coordinate(3, 0);
  EXPECT_EQ(integrate_affine_facet(fs[0], x1), Rational(0));
  EXPECT_EQ(integrate_affine_facet(fs[2], x1), Rational(4, 3));
  EXPECT_EQ(integrate_affine_facet(fs[4], x1), Rational(7, 6));
}

TEST(FacetIntegral, RedundantInequalityHasNoMeasure) {
  const auto p = from_rows(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}, {{-1, 0}, 5}, {{1, 1}, 0}});
  const auto fs = facets(p);
  EXPECT_FALSE(fs[3].proper);
  EXPECT_FALSE(fs[4].proper);  // touches only at the vertex (0,0)
  EXPECT_EQ(facet_lattice_volume(fs[3]), Rational(0));
  EXPECT_EQ(facet_lattice_volume(fs[4]), Rational(0));
  EXPECT_EQ(integrate_affine_facet(fs[4], constant(2, 1)), Rational(0));
}

TEST(Lasserre, Examples) {
  EXPECT_EQ(lasserre_volume(cp2_triangle(1)), Rational(1, 2));
  EXPECT_EQ(lasserre_volume(blowup(2, 1)), Rational(7, 6));
  EXPECT_EQ(lasserre_volume(unit_cube(3)), Rational(1));
  EXPECT_EQ(lasserre_volume(square_pyramid()), Rational(4, 3));
}

TEST(Lasserre, DegenerateAndEmptySetsHaveZeroVolume) {
  // <a, x> <= b form: a segment in the plane and an empty set.
  const std::vector<IntVector> normals{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  EXPECT_EQ(lasserre_volume(2, normals, std::vector<Rational>{0, 1, 0, 0}), Rational(0));
  EXPECT_EQ(lasserre_volume(2, normals, std::vector<Rational>{0, -1, 0, 1}), Rational(0));
  EXPECT_EQ(lasserre_volume(2, normals, std::vector<Rational>{0, 2, 0, 3}), Rational(6));
}

TEST(EhrhartOracle, BlowupAgreesExactly) {
  const auto p = blowup(2, 1);
  const auto region = check::lattice_region(p);
  EXPECT_EQ(check::ehrhart_integral(region, constant(3, 1)), volume(p));
  EXPECT_EQ(check::ehrhart_integral(region, coordinate(3, 0)), Rational(5, 8));
  const auto fs = facets(p);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const auto facet = check::facet_region(region, k);
    EXPECT_EQ(check::ehrhart_integral(facet, constant(3, 1)), facet_lattice_volume(fs[k])) << k;
    EXPECT_EQ(check::ehrhart_integral(facet, coordinate(3, 0)), integrate_affine_facet(fs[k], coordinate(3, 0)))
        << k;
  }
}

TEST(EhrhartOracle, RandomPolytopesAgreeExactly) {
  Rng rng(41);
  int compared = 0;
  for (int trial = 0; trial < 200 && compared < 8; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto p = random_polytope(rng, n, 1 + trial % 3);
    const Integer d = vertex_denominator_lcm(p);
    if (d > (n == 2 ? 12 : 4)) continue;  // keep the lattice-point sweep small
    ++compared;
    const auto region = check::lattice_region(p, d);
    const Rational dn = pow(Rational(d), static_cast<unsigned>(n));
    const auto g = random_form(rng, n);
    const auto fs = facets(p);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(check::ehrhart_integral(region, undilate(g, d)) / dn, integrate_affine(p, g));
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (!fs[k].proper) continue;
      const auto facet = check::facet_region(region, k);
      const Rational dn1 = dn / Rational(d);
      EXPECT_EQ(check::ehrhart_integral(facet, undilate(g, d)) / dn1, integrate_affine_facet(fs[k], g)) << k;
    }
  }
  EXPECT_EQ(compared, 8);
}

TEST(PolytopeProperties, VolumeMatchesLasserre) {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_polytope(rng, 1 + trial % 4, static_cast<std::size_t>(trial % 4));
    EXPECT_EQ(volume(p), lasserre_volume(p)) << trial;
  }
}

TEST(PolytopeProperties, IntegralIsLinear) {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto p = random_polytope(rng, n, 2);
    const auto f = random_form(rng, n);
    const auto g = random_form(rng, n);
    const Rational a = check::random_rational(rng);
    const Rational b = check::random_rational(rng);
    EXPECT_EQ(integrate_affine(p, a * f + b * g), a * integrate_affine(p, f) + b * integrate_affine(p, g));
  }
}

TEST(PolytopeProperties, ApexRuleDoesNotMatter) {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto p = random_polytope(rng, n, 3);
    const auto g = random_form(rng, n);
    EXPECT_EQ(volume(p, ApexRule::LowestLex), volume(p, ApexRule::HighestLex));
    EXPECT_EQ(integrate_affine(p, g, ApexRule::LowestLex), integrate_affine(p, g, ApexRule::HighestLex));
    const auto low = facets(p, ApexRule::LowestLex);
    const auto high = facets(p, ApexRule::HighestLex);
    for (std::size_t k = 0; k < low.size(); ++k) {
      EXPECT_EQ(integrate_affine_facet(low[k], g), integrate_affine_facet(high[k], g));
    }
  }
  EXPECT_EQ(volume(square_pyramid(), ApexRule::HighestLex), Rational(4, 3));
}

TEST(PolytopeProperties, UnimodularInvariance) {
  // y = U x + t with V = U^{-T}: normals map to V u, forms c + <a, x> to
  // c - <V a, t> + <V a, y>.
  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const auto p = random_polytope(rng, n, 2);
    const IntMatrix v = check::random_unimodular(rng, n);
    const RatVector t = check::random_rational_vector(rng, n);
    std::vector<Inequality> moved;
    for (const auto& q : p.inequalities) {
      const IntVector normal = multiply(v, std::span<const Integer>(q.normal));
      moved.push_back({normal, q.offset - dot(normal, t)});
    }
    const auto image = make_polytope(n, moved);
    const auto g = random_form(rng, n);
    const RatVector va = multiply(v, std::span<const Rational>(g.gradient));
    const AffineForm moved_g{g.constant - dot(va, t), va};

    EXPECT_EQ(volume(image), volume(p));
    EXPECT_EQ(image.vertices.size(), p.vertices.size());
    EXPECT_EQ(integrate_affine(image, moved_g), integrate_affine(p, g));
    const auto fa = facets(p);
    const auto fb = facets(image);
    for (std::size_t k = 0; k < fa.size(); ++k) {
      EXPECT_EQ(facet_lattice_volume(fb[k]), facet_lattice_volume(fa[k]));
      EXPECT_EQ(integrate_affine_facet(fb[k], moved_g), integrate_affine_facet(fa[k], g));
    }
  }
}

TEST(PolytopeProperties, DilationScalesMeasures) {
  Rng rng(61);
  for (const Rational& gamma : {Rational(2), Rational(1, 3), Rational(5, 2)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const auto p = random_polytope(rng, n, 1);
      std::vector<Inequality> scaled = p.inequalities;
      for (auto& q : scaled) q.offset *= gamma;
      const auto big = make_polytope(n, scaled);
      EXPECT_EQ(volume(big), pow(gamma, static_cast<unsigned>(n)) * volume(p));
      const auto fa = facets(p);
      const auto fb = facets(big);
      for (std::size_t k = 0; k < fa.size(); ++k) {
        EXPECT_EQ(facet_lattice_volume(fb[k]), pow(gamma, static_cast<unsigned>(n - 1)) * facet_lattice_volume(fa[k]));
      }
    }
  }
}

TEST(PolytopeProperties, MeanLiesBetweenExtremes) {
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto p = random_polytope(rng, n, 2);
    const auto g = random_form(rng, n);
    const Rational mean = integrate_affine(p, g) / volume(p);
    Rational lo = g(p.vertices.front());
    Rational hi = lo;
    for (const auto& v : p.vertices) {
      lo = std::min(lo, g(v));
      hi = std::max(hi, g(v));
    }
    EXPECT_LE(lo, mean);
    EXPECT_LE(mean, hi);
  }
}

TEST(PolytopeProperties, SupportFunctionMatchesBruteForce) {
  // For a random direction d, the vertex maximum of <d, x> is attained: it
  // is tight for some vertex and no constraint-feasible grid point exceeds it.
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_polytope(rng, 2, 2);
    const RatVector d = check::random_rational_vector(rng, 2);
    Rational best = dot(d, p.vertices.front());
    for (const auto& v : p.vertices) best = std::max(best, dot(d, v));
    for (long a = -40; a <= 40; ++a) {
      for (long b = -40; b <= 40; ++b) {
        const RatVector x{Rational(Integer(a), Integer(4)), Rational(Integer(b), Integer(4))};
        bool inside = true;
        for (const auto& q : p.inequalities) inside = inside && q.slack(x).sign() >= 0;
        if (inside) {
          EXPECT_LE(dot(d, x), best);
        }
      }
    }
  }
}
