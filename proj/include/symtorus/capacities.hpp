#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "symtorus/ech.hpp"
#include "symtorus/errors.hpp"
#include "symtorus/geometry.hpp"
#include "symtorus/rational.hpp"
#include "symtorus/reeb.hpp"

namespace symtorus {

struct CapacityVerdict {
  enum class Kind { exact, squared, infinite, interval };

  Kind kind = Kind::exact;
  Rational value;    // exact: the capacity; squared: its square
  Rational lo, hi;   // interval bounds; lo = hi = value for exact verdicts
  std::string rule;  // axis_symmetric | small_ratio | rectangle | cylinder | interval_only
  std::optional<Rational> sys;
  std::optional<Rational> rho;
  bool lower_exact = true;  // interval only: lo is the exact gen-toric width

  bool is_equality() const { return kind == Kind::exact || kind == Kind::squared; }

  // Decimal rendering; surds are evaluated from the squared value.
  std::string decimal(unsigned digits = 12) const {
    auto render = [&](const Rational& x) {
      long double v = x.to_long_double();
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*Lf", static_cast<int>(digits), v);
      return std::string(buf);
    };
    switch (kind) {
      case Kind::exact: return render(value);
      case Kind::squared: {
        auto [l, h] = sqrt_bounds(value, 96);
        return render((l + h) / 2);
      }
      case Kind::infinite: return "inf";
      case Kind::interval: return "[" + render(lo) + ", " + render(hi) + "]";
    }
    return "";
  }
};

inline CapacityVerdict exact_verdict(const Rational& v, std::string rule) {
  CapacityVerdict c;
  c.kind = CapacityVerdict::Kind::exact;
  c.value = c.lo = c.hi = v;
  c.rule = std::move(rule);
  return c;
}

// Capacity of the flat codisc bundle with fiber A.  Equal to 2 sys(A) when
// A is symmetric in both axes or sys_ratio(A) <= 1/8; otherwise only the
// bracket [gen-toric Gromov width, 2 sys(A)] is certified.
inline CapacityVerdict normalized_capacity(const StarPolygon& A) {
  if (!is_convex(A)) fail(error_kind::not_convex, "fiber must be convex");
  if (!is_centrally_symmetric(A)) fail(error_kind::not_centrally_symmetric, "fiber must be centrally symmetric");
  const Rational s = sys(A);
  const Rational rho = sys_ratio(A);
  CapacityVerdict v;
  if (rho <= Rational(1, 8)) {
    v = exact_verdict(2 * s, "small_ratio");
  } else if (is_axis_symmetric(A)) {
    v = exact_verdict(2 * s, "axis_symmetric");
  } else {
    const auto g = gromov_width(weight_decomposition(translated_to_axes(A)));
    v.kind = CapacityVerdict::Kind::interval;
    v.lo = g.value;
    v.hi = 2 * s;
    v.value = v.hi;
    v.lower_exact = g.exact;
    v.rule = "interval_only";
  }
  v.sys = s;
  v.rho = rho;
  return v;
}

// Fiber [-a,a] x [-b,b] with a <= b.
inline Rational rectangle_capacity(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b < a) fail(error_kind::invalid_argument, "need 0 < a <= b");
  return 2 * a;
}

// Cylinder of radius r about the line through direction v.  A rational
// direction is given by its primitive integer vector (m, n) and has capacity
// 2 r sqrt(m^2 + n^2), reported squared; an irrational one has capacity +inf.
inline CapacityVerdict tilted_cylinder_capacity(const Rational& r, const std::optional<Direction>& v) {
  if (r.sign() <= 0) fail(error_kind::invalid_argument, "radius must be positive");
  CapacityVerdict c;
  c.rule = "cylinder";
  if (!v) {
    c.kind = CapacityVerdict::Kind::infinite;
    return c;
  }
  const Direction d = Direction::make(v->m, v->n);
  c.kind = CapacityVerdict::Kind::squared;
  c.value = 4 * pow2(r) * Rational(Integer(d.m * d.m + d.n * d.n));
  return c;
}

// The parallelogram with two edges on m x + n y = +-s and two edges on
// x = +-a (y = +-a when n = 0), inscribed in the strip of half-width s.
// For a >= |n| s + 1 its systole is s, attained by the strip normal.
inline StarPolygon cylinder_polygon(const Direction& v, const Rational& a, const Rational& s) {
  const Rational m(v.m), n(v.n);
  std::vector<PointQ> pts;
  if (v.n != 0) {
    const PointQ p1{a, (s - m * a) / n}, p2{-a, (s + m * a) / n};
    pts = {p1, p2, -p1, -p2};
  } else {
    const PointQ p1{(s - n * a) / m, a}, p2{(s + n * a) / m, -a};
    pts = {p1, p2, -p1, -p2};
  }
  return StarPolygon::make(std::move(pts));
}

struct ToricTransferReport {
  bool monotone = true;
  WeightSequence weights;
  GromovWidth ball_normalized;  // common value of ball-normalized capacities
  Rational cube_normalized;     // largest t with (t, t) in the region
  std::string statement;
};

namespace detail {

// Outward normals of edges off the coordinate axes must be >= 0 entrywise.
inline bool is_monotone_region(const std::vector<PointQ>& v) {
  const std::size_t n = v.size();
  Rational twice = 0;
  for (std::size_t i = 0; i < n; ++i) twice += cross(v[i], v[(i + 1) % n]);
  const int orient = twice.sign() > 0 ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) {
    const PointQ& a = v[i];
    const PointQ& b = v[(i + 1) % n];
    if (a.y.sign() == 0 && b.y.sign() == 0) continue;
    if (a.x.sign() == 0 && b.x.sign() == 0) continue;
    const PointQ e = b - a;
    const PointQ out{Rational(orient) * e.y, Rational(-orient) * e.x};
    if (out.x.sign() < 0 || out.y.sign() < 0) return false;
  }
  return true;
}

}  // namespace detail

// Capacities of the toric domain over the region agree with those of the
// product of the torus with the region.  The region is given as a polygon
// (vertex list, either orientation) inside the closed positive quadrant.
inline ToricTransferReport toric_transfer(const std::vector<PointQ>& omega) {
  for (const auto& p : omega)
    if (p.x.sign() < 0 || p.y.sign() < 0) fail(error_kind::not_in_positive_quadrant, "vertex outside the quadrant");
  if (omega.size() < 3) fail(error_kind::degenerate, "region needs at least three vertices");
  if (!detail::is_monotone_region(omega)) fail(error_kind::not_monotone, "an outward normal has a negative entry");
  const auto hull = convex_hull_points(omega);
  if (hull.size() != omega.size()) fail(error_kind::not_convex, "capacity transfer is computed for convex regions");
  ToricTransferReport r;
  r.weights = weight_decomposition(hull);
  r.ball_normalized = gromov_width(r.weights);
  std::optional<Rational> t;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PointQ e = hull[(i + 1) % n] - hull[i];
    const PointQ out{e.y, -e.x};
    const Rational sum = out.x + out.y;
    if (sum.sign() <= 0) continue;
    const Rational c = dot(out, hull[i]) / sum;
    if (!t || c < *t) t = c;
  }
  r.cube_normalized = t.value_or(Rational(0));
  r.statement = "capacities of the toric domain equal those of the torus product; ball-normalized value " +
                r.ball_normalized.value.str() + (r.ball_normalized.exact ? "" : " (lower bound)") +
                ", cube-normalized value " + r.cube_normalized.str();
  return r;
}

struct ViterboProbe {
  GromovWidth width;
  Rational sys;
  bool gap = false;
  std::string message;
};

// A gen-toric Gromov width below 2 sys(A) would give a Lagrangian product
// with Gromov width below its Hofer-Zehnder capacity 4.
inline ViterboProbe viterbo_probe(const StarPolygon& A) {
  if (!is_convex(A)) fail(error_kind::not_convex, "fiber must be convex");
  if (!is_centrally_symmetric(A)) fail(error_kind::not_centrally_symmetric, "fiber must be centrally symmetric");
  ViterboProbe p;
  p.width = gromov_width(weight_decomposition(translated_to_axes(A)));
  p.sys = sys(A);
  const Rational two_s = 2 * p.sys;
  p.gap = p.width.upper < two_s;
  if (p.gap)
    p.message = "strong-Viterbo counterexample implied for A x A* (c_Gr < 4 = c_HZ): w = " + p.width.upper.str() +
                " < 2 sys = " + two_s.str();
  else
    p.message = "no gap detected: w = " + p.width.value.str() + ", 2 sys = " + two_s.str();
  return p;
}

}  // namespace symtorus
