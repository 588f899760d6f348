#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "symtorus/geometry.hpp"

namespace fixtures {

using symtorus::ConvexPolygon;
using symtorus::Integer;
using symtorus::PointQ;
using symtorus::Rational;
using symtorus::StarPolygon;

inline Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

inline std::vector<PointQ> pts(std::initializer_list<std::pair<Rational, Rational>> xs) {
  std::vector<PointQ> v;
  for (const auto& [x, y] : xs) v.push_back({x, y});
  return v;
}

inline StarPolygon star(std::initializer_list<std::pair<Rational, Rational>> xs) { return StarPolygon::make(pts(xs)); }
inline ConvexPolygon convex(std::initializer_list<std::pair<Rational, Rational>> xs) {
  return ConvexPolygon::make(pts(xs));
}

inline ConvexPolygon cross_polytope(const Rational& a = 1) { return convex({{a, 0}, {0, a}, {-a, 0}, {0, -a}}); }
inline ConvexPolygon square(const Rational& a = 1) { return convex({{a, a}, {-a, a}, {-a, -a}, {a, -a}}); }
inline ConvexPolygon rectangle(const Rational& a, const Rational& b) { return convex({{a, b}, {-a, b}, {-a, -b}, {a, -b}}); }

// triangle (-1,-1),(1,0),(0,1)
inline ConvexPolygon tri_neg() { return convex({{-1, -1}, {1, 0}, {0, 1}}); }

// triangle (0,1),(1,-1),(-1,-1)
inline ConvexPolygon tri_wide() { return convex({{0, 1}, {-1, -1}, {1, -1}}); }

// tri_neg with its (-1,-1) corner replaced by an inward notch of size delta
inline StarPolygon notched(const Rational& d) {
  return StarPolygon::make({{1, 0}, {0, 1}, {-1 + d, -1 + 2 * d}, {-1 + 2 * d, -1 + 2 * d}, {-1 + 2 * d, -1 + d}});
}

using rng_t = std::mt19937_64;

inline long uniform(rng_t& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Angular order of nonzero integer vectors starting at the positive x axis.
inline bool angle_less(const PointQ& a, const PointQ& b) {
  auto half = [](const PointQ& p) { return p.y.sign() < 0 || (p.y.sign() == 0 && p.x.sign() < 0); };
  bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return symtorus::cross(a, b).sign() > 0;
}

// Star polygon with vertices r_i * u_i for random rational directions u_i
// (angular gaps < pi) and random radii in [1/4, 2].
inline StarPolygon random_star(rng_t& rng, int max_vertices = 12) {
  for (;;) {
    const int n = static_cast<int>(uniform(rng, 3, max_vertices));
    std::vector<PointQ> dirs;
    for (int i = 0; i < n; ++i) {
      long a = uniform(rng, -12, 12), b = uniform(rng, -12, 12);
      if (a == 0 && b == 0) continue;
      dirs.push_back({q(a), q(b)});
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    std::vector<PointQ> u;
    for (const auto& d : dirs)
      if (u.empty() || symtorus::cross(u.back(), d).sign() != 0 || symtorus::dot(u.back(), d).sign() < 0)
        u.push_back(d);
    if (u.size() < 3) continue;
    bool ok = true;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (symtorus::cross(u[i], u[(i + 1) % u.size()]).sign() <= 0) ok = false;
    if (!ok) continue;
    std::vector<PointQ> v;
    for (const auto& d : u) {
      Rational len = symtorus::max(symtorus::abs(d.x), symtorus::abs(d.y));
      Rational r = q(uniform(rng, 2, 16), 8);
      v.push_back({r * d.x / len, r * d.y / len});
    }
    return StarPolygon::make(std::move(v));
  }
}

inline ConvexPolygon random_convex(rng_t& rng) { return symtorus::convex_hull(random_star(rng)); }

// Centrally symmetric convex lattice polygon with vertices in [-R,R]^2.
inline ConvexPolygon random_symmetric_lattice(rng_t& rng, long R = 6) {
  for (;;) {
    std::vector<PointQ> v;
    const int k = static_cast<int>(uniform(rng, 2, 5));
    for (int i = 0; i < k; ++i) {
      PointQ p{q(uniform(rng, -R, R)), q(uniform(rng, -R, R))};
      v.push_back(p);
      v.push_back(-p);
    }
    auto h = symtorus::convex_hull_points(v);
    if (h.size() < 4) continue;
    return ConvexPolygon::make(h);
  }
}

// Strictly monotone staircase in every quadrant joining points on the axes.
inline StarPolygon random_generalized_monotone(rng_t& rng) {
  std::vector<PointQ> v;
  const PointQ axes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Rational> radius;
  for (int i = 0; i < 4; ++i) radius.push_back(q(uniform(rng, 4, 16), 4));
  for (int qd = 0; qd < 4; ++qd) {
    const PointQ a = radius[qd] * axes[qd];
    const PointQ b = radius[(qd + 1) % 4] * axes[(qd + 1) % 4];
    v.push_back(a);
    // interior steps: x from |a| down to 0, y from 0 up to |b|, both strictly
    const int steps = static_cast<int>(uniform(rng, 0, 3));
    std::vector<long> xs, ys;
    for (int s = 0; s < steps; ++s) {
      xs.push_back(uniform(rng, 1, 99));
      ys.push_back(uniform(rng, 1, 99));
    }
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const std::size_t m = std::min(xs.size(), ys.size());
    const Rational ra = radius[qd], rb = radius[(qd + 1) % 4];
    for (std::size_t s = 0; s < m; ++s) {
      // local frame: first axis along a, second along b
      const Rational fx = ra * q(xs[s], 100), fy = rb * q(ys[s], 100);
      const PointQ ua = (Rational(1) / ra) * a, ub = (Rational(1) / rb) * b;
      v.push_back(fx * ua + fy * ub);
    }
  }
  return StarPolygon::make(std::move(v));
}

// Star polygon whose hull is the cross polytope: the four axis vertices
// plus random dents strictly inside each quadrant.
inline StarPolygon random_star_in_cross(rng_t& rng) {
  std::vector<PointQ> v;
  const PointQ axes[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int qd = 0; qd < 4; ++qd) {
    v.push_back(axes[qd]);
    const int steps = static_cast<int>(uniform(rng, 0, 3));
    std::vector<long> ts;
    for (int s = 0; s < steps; ++s) ts.push_back(uniform(rng, 1, 19));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (long t : ts) {
      // point on the segment axes[qd] -> axes[qd+1] pulled towards the origin
      const Rational s = q(t, 20);
      const PointQ onedge = (1 - s) * axes[qd] + s * axes[(qd + 1) % 4];
      const Rational pull = q(uniform(rng, 5, 20), 20);
      v.push_back(pull * onedge);
    }
  }
  return StarPolygon::make(std::move(v));
}

}  // namespace fixtures
