#include <gtest/gtest.h>

#include <set>

#include "support/fixtures.hpp"
#include "symtorus/geometry.hpp"

using namespace symtorus;
using namespace fixtures;

namespace {

// Shoelace over explicit triangles fanned from the origin; independent of
// the polygon's own area routine.
Rational fan_area(const std::vector<PointQ>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += (a.x * b.y - a.y * b.x) / 2;
  }
  return s;
}

bool contains_exact(const std::vector<PointQ>& poly, const PointQ& p) {
  // convex polygon, CCW
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (cross(poly[(i + 1) % poly.size()] - poly[i], p - poly[i]).sign() < 0) return false;
  return true;
}

}  // namespace

TEST(MakeStarPolygon, AcceptsCrossAndTriangle) {
  auto b = cross_polytope();
  EXPECT_EQ(b.size(), 4u);
  auto t = star({{1, 0}, {0, 1}, {-1, -1}});
  EXPECT_EQ(t.size(), 3u);
}

TEST(MakeStarPolygon, ReordersClockwiseInput) {
  auto t = star({{1, 0}, {-1, -1}, {0, 1}});
  EXPECT_GT(area(t), Rational(0));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == PointQ{1, 0}) {
      EXPECT_EQ(t.vertex(i + 1), (PointQ{0, 1}));
    }
}

TEST(MakeStarPolygon, RejectsOriginOutside) {
  try {
    star({{1, 0}, {2, 1}, {1, 2}, {0, 1}});
    FAIL();
  } catch (const symtorus::error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_star_shaped);
  }
}

TEST(MakeStarPolygon, RejectsSelfIntersectionAndDegenerates) {
  try {
    star({{3, 0}, {0, 3}, {-2, -1}, {-1, 2}, {0, -3}});
    FAIL();
  } catch (const symtorus::error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_simple);
  }
  try {
    star({{1, 0}, {1, 0}, {0, 1}, {-1, -1}});
    FAIL();
  } catch (const symtorus::error& e) {
    EXPECT_EQ(e.kind(), error_kind::degenerate);
  }
  try {
    star({{1, 0}, {2, 0}, {3, 0}});
    FAIL();
  } catch (const symtorus::error& e) {
    EXPECT_EQ(e.kind(), error_kind::degenerate);
  }
}

TEST(MakeStarPolygon, RejectsStarWoundTwice) {
  // pentagram: every edge sees the origin but the boundary crosses itself
  std::vector<PointQ> v = {{10, 0}, {-8, 6}, {3, -10}, {3, 10}, {-8, -6}};
  EXPECT_THROW(StarPolygon::make(v), symtorus::error);
}

TEST(ConvexPolygonType, RejectsReflexAndCollinear) {
  EXPECT_THROW(ConvexPolygon::make(pts({{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}})), symtorus::error);
  EXPECT_THROW(ConvexPolygon::from(notched(q(1, 10))), symtorus::error);
}

TEST(Area, Examples) {
  EXPECT_EQ(area(cross_polytope()), 2);
  EXPECT_EQ(area(tri_neg()), q(3, 2));
  EXPECT_EQ(area(tri_wide()), 2);
}

TEST(Area, ScalesQuadraticallyOnRandomPolygons) {
  rng_t rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = random_star(rng);
    Rational c = q(uniform(rng, 1, 9), uniform(rng, 1, 9));
    EXPECT_EQ(area(scaled(p, c)), c * c * area(p));
    EXPECT_EQ(area(p), fan_area(p.vertices()));
    EXPECT_GT(area(p), Rational(0));
  }
}

TEST(ConvexHull, ConvexInputIsFixed) {
  auto t = tri_neg();
  EXPECT_EQ(convex_hull(t).vertices().size(), 3u);
  EXPECT_EQ(area(convex_hull(t)), area(t));
}

TEST(ConvexHull, NotchedCrossHasCrossHull) {
  auto p = star({{1, 0}, {q(1, 4), q(1, 4)}, {0, 1}, {-1, 0}, {0, -1}});
  auto h = convex_hull(p);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(area(h), 2);
}

TEST(ConvexHull, AlternatingStar) {
  std::vector<PointQ> v;
  const PointQ dirs[8] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (int i = 0; i < 8; ++i) v.push_back(i % 2 == 0 ? dirs[i] : q(1, 4) * dirs[i]);
  auto h = convex_hull(StarPolygon::make(v));
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(area(h), 2);
}

TEST(ConvexHull, ContainsPolygonAndIsIdempotent) {
  rng_t rng(5);
  for (int i = 0; i < 100; ++i) {
    auto p = random_star(rng);
    auto h = convex_hull(p);
    for (const auto& v : p.vertices()) {
      EXPECT_LE(gauge(h, v), Rational(1));
      EXPECT_TRUE(contains_exact(h.vertices(), v));
    }
    EXPECT_EQ(convex_hull(h).vertices(), h.vertices());
  }
}

TEST(Support, Examples) {
  EXPECT_EQ(support(cross_polytope(), Direction::make(1, 1)), 1);
  EXPECT_EQ(support(cross_polytope(), Direction::make(1, 0)), 1);
  EXPECT_EQ(support(square(), Direction::make(2, 1).vec()), 3);
}

TEST(Gauge, Examples) {
  EXPECT_EQ(gauge(cross_polytope(), PointQ{1, 1}), 2);
  EXPECT_EQ(gauge(cross_polytope(), PointQ{q(1, 2), 0}), q(1, 2));
  EXPECT_EQ(gauge(tri_neg(), PointQ{1, 1}), 2);
  EXPECT_EQ(gauge(tri_neg(), PointQ{0, 0}), 0);
}

TEST(PolarDual, CrossAndSquareAreDual) {
  auto d = polar_dual(cross_polytope());
  std::set<PointQ> got(d.vertices().begin(), d.vertices().end());
  std::set<PointQ> want{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  EXPECT_EQ(got, want);
  auto s = polar_dual(square());
  std::set<PointQ> got2(s.vertices().begin(), s.vertices().end());
  std::set<PointQ> want2{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  EXPECT_EQ(got2, want2);
}

TEST(PolarDual, TriangleEdgeToVertex) {
  auto d = polar_dual(convex({{2, 0}, {0, 2}, {-2, -2}}));
  std::set<PointQ> got(d.vertices().begin(), d.vertices().end());
  // edge x+y=2, edge -2x+y=2, edge x-2y=2
  std::set<PointQ> want{{q(1, 2), q(1, 2)}, {-1, q(1, 2)}, {q(1, 2), -1}};
  EXPECT_EQ(got, want);
}

TEST(PolarDual, BipolarityOnRandomConvex) {
  rng_t rng(7);
  for (int i = 0; i < 60; ++i) {
    auto c = random_convex(rng);
    auto dd = polar_dual(polar_dual(c));
    std::set<PointQ> a(c.vertices().begin(), c.vertices().end());
    std::set<PointQ> b(dd.vertices().begin(), dd.vertices().end());
    EXPECT_EQ(a, b);
  }
}

TEST(PolarDual, GaugeSupportDuality) {
  rng_t rng(8);
  for (int i = 0; i < 20; ++i) {
    auto c = random_symmetric_lattice(rng);
    auto d = polar_dual(c);
    for (long m = -10; m <= 10; ++m)
      for (long n = -10; n <= 10; ++n) {
        if (m * m + n * n > 100 || (m == 0 && n == 0)) continue;
        PointQ w{m, n};
        EXPECT_EQ(support(c, w), gauge(d, w));
      }
  }
}

TEST(NormalFeatures, CrossPolytope) {
  auto fs = normal_features(cross_polytope());
  ASSERT_EQ(fs.size(), 8u);
  std::set<Direction> edges;
  for (const auto& f : fs)
    if (f.kind == NormalFeature::Kind::edge) edges.insert(f.normal);
  std::set<Direction> want{Direction::make(1, 1), Direction::make(-1, 1), Direction::make(-1, -1),
                           Direction::make(1, -1)};
  EXPECT_EQ(edges, want);
  // vertex (1,0) arc from (1,-1) to (1,1) contains (1,0) and has width pi/2
  const auto& v0 = fs[4];
  EXPECT_EQ(v0.anchor, (PointQ{1, 0}));
  EXPECT_TRUE(v0.arc_contains(Direction::make(1, 0)));
  EXPECT_FALSE(v0.reflex);
  EXPECT_EQ(dot(v0.arc_from.vec(), v0.arc_to.vec()), 0);
}

TEST(NormalFeatures, TriangleAndSquareEdgeDirections) {
  std::set<Direction> got;
  for (const auto& f : normal_features(tri_neg()))
    if (f.kind == NormalFeature::Kind::edge) got.insert(f.normal);
  std::set<Direction> want{Direction::make(1, 1), Direction::make(1, -2), Direction::make(-2, 1)};
  EXPECT_EQ(got, want);
  std::set<Direction> sq;
  for (const auto& f : normal_features(square()))
    if (f.kind == NormalFeature::Kind::edge) sq.insert(f.normal);
  std::set<Direction> want2{Direction::make(1, 0), Direction::make(0, 1), Direction::make(-1, 0),
                            Direction::make(0, -1)};
  EXPECT_EQ(sq, want2);
}

TEST(NormalFeatures, ReflexVertexFlagged) {
  auto fs = normal_features(notched(q(1, 10)));
  int reflex = 0;
  for (const auto& f : fs)
    if (f.kind == NormalFeature::Kind::vertex && f.reflex) {
      ++reflex;
      EXPECT_EQ(f.anchor, (PointQ{q(-8, 10), q(-8, 10)}));
      EXPECT_TRUE(f.arc_contains(Direction::make(-1, -1)));
      EXPECT_FALSE(f.arc_contains(Direction::make(1, 1)));
    }
  EXPECT_EQ(reflex, 1);
}

TEST(NormalFeatures, ConvexCoverageIsAPartition) {
  rng_t rng(13);
  for (int i = 0; i < 25; ++i) {
    auto c = random_convex(rng);
    auto fs = normal_features(c);
    for (long m = -20; m <= 20; ++m)
      for (long n = -20; n <= 20; ++n) {
        if (gcd(Integer(m), Integer(n)) != 1) continue;
        Direction w = Direction::make(m, n);
        int owners = 0;
        for (const auto& f : fs) owners += f.owns(w);
        EXPECT_EQ(owners, 1) << w.str();
      }
  }
}

TEST(Symmetry, CentralSymmetryExamples) {
  EXPECT_TRUE(is_centrally_symmetric(cross_polytope()));
  EXPECT_FALSE(is_centrally_symmetric(tri_neg()));
  auto hex = convex({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
  EXPECT_TRUE(is_centrally_symmetric(hex));
  auto hex2 = convex({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
  EXPECT_TRUE(is_centrally_symmetric(hex2));
  EXPECT_FALSE(is_axis_symmetric(hex2));
}

TEST(GeneralizedMonotone, Examples) {
  EXPECT_TRUE(is_generalized_monotone(cross_polytope()));
  EXPECT_FALSE(is_generalized_monotone(tri_neg()));
  EXPECT_TRUE(is_generalized_monotone(square()));
  EXPECT_TRUE(is_generalized_monotone(star({{1, 0}, {q(1, 4), q(1, 4)}, {0, 1}, {q(-1, 4), q(1, 4)}, {-1, 0},
                                            {q(-1, 4), q(-1, 4)}, {0, -1}, {q(1, 4), q(-1, 4)}})));
}

TEST(GeneralizedMonotone, GeneratorProducesMonotonePolygons) {
  rng_t rng(17);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_generalized_monotone(random_generalized_monotone(rng)));
}

TEST(Direction, RejectsNonPrimitive) {
  EXPECT_THROW(Direction::make(2, 4), symtorus::error);
  EXPECT_THROW(Direction::make(0, 0), symtorus::error);
  EXPECT_EQ(Direction::of(PointQ{q(1, 2), q(3, 4)}), Direction::make(2, 3));
}

TEST(InscribedNgon, VerticesOnCircleAndSymmetric) {
  auto p = inscribed_ngon(16);
  EXPECT_EQ(p.size(), 16u);
  for (const auto& v : p.vertices()) EXPECT_EQ(v.x * v.x + v.y * v.y, 1);
  EXPECT_TRUE(is_centrally_symmetric(p));
  EXPECT_NO_THROW(ConvexPolygon::from(p));
}
