#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "symtorus/errors.hpp"
#include "symtorus/rational.hpp"

namespace symtorus {

template <class F>
struct point2 {
  F x{};
  F y{};

  friend point2 operator+(const point2& a, const point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend point2 operator-(const point2& a, const point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend point2 operator-(const point2& a) { return {-a.x, -a.y}; }
  friend point2 operator*(const F& c, const point2& a) { return {c * a.x, c * a.y}; }
  friend bool operator==(const point2& a, const point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const point2& a, const point2& b) { return !(a == b); }
  friend bool operator<(const point2& a, const point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend std::ostream& operator<<(std::ostream& os, const point2& p) { return os << '(' << p.x << ',' << p.y << ')'; }
};

using PointQ = point2<Rational>;

template <class F>
F dot(const point2<F>& a, const point2<F>& b) { return a.x * b.x + a.y * b.y; }

template <class F>
F cross(const point2<F>& a, const point2<F>& b) { return a.x * b.y - a.y * b.x; }

template <class F>
int sign_of(const F& v) { return v > F(0) ? 1 : (v < F(0) ? -1 : 0); }

// Primitive integer vector: (m, n) != 0 and gcd(|m|, |n|) = 1.
struct Direction {
  Integer m{1};
  Integer n{0};

  Direction() = default;

  static Direction make(const Integer& m, const Integer& n) {
    if (m == 0 && n == 0) fail(error_kind::not_prime, "zero vector");
    if (gcd(m, n) != 1)
      fail(error_kind::not_prime, "(" + m.get_str() + "," + n.get_str() + ") is not primitive");
    Direction d;
    d.m = m;
    d.n = n;
    return d;
  }

  static Direction primitive_of(const Integer& x, const Integer& y) {
    if (x == 0 && y == 0) fail(error_kind::degenerate, "zero vector has no direction");
    Integer g = gcd(x, y);
    return make(Integer(x / g), Integer(y / g));
  }

  // Primitive integer vector positively proportional to a rational vector.
  static Direction of(const PointQ& v) {
    Integer l = lcm(v.x.den(), v.y.den());
    return primitive_of(Integer(v.x.num() * (l / v.x.den())), Integer(v.y.num() * (l / v.y.den())));
  }

  PointQ vec() const { return {Rational(m), Rational(n)}; }
  Direction operator-() const { return make(Integer(-m), Integer(-n)); }

  friend bool operator==(const Direction& a, const Direction& b) { return a.m == b.m && a.n == b.n; }
  friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
  friend bool operator<(const Direction& a, const Direction& b) {
    return a.m < b.m || (a.m == b.m && a.n < b.n);
  }
  std::string str() const { return "(" + m.get_str() + "," + n.get_str() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Direction& d) { return os << d.str(); }
};

inline Rational dot(const Direction& w, const PointQ& p) { return Rational(w.m) * p.x + Rational(w.n) * p.y; }
inline Integer det(const Direction& a, const Direction& b) { return a.m * b.n - a.n * b.m; }

namespace detail {

template <class F>
F signed_area2(const std::vector<point2<F>>& v) {
  F s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

template <class F>
bool on_segment(const point2<F>& p, const point2<F>& a, const point2<F>& b) {
  return cross(b - a, p - a) == F(0) && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

template <class F>
bool segments_intersect(const point2<F>& a, const point2<F>& b, const point2<F>& c, const point2<F>& d) {
  int d1 = sign_of(cross(b - a, c - a));
  int d2 = sign_of(cross(b - a, d - a));
  int d3 = sign_of(cross(d - c, a - c));
  int d4 = sign_of(cross(d - c, b - c));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(c, a, b)) || (d2 == 0 && on_segment(d, a, b)) ||
         (d3 == 0 && on_segment(a, c, d)) || (d4 == 0 && on_segment(b, c, d));
}

}  // namespace detail

// Simple polygon, counterclockwise, with the origin strictly on the inner side
// of every edge.  The last condition is det(v_i, v_{i+1}) > 0 for each edge.
template <class F>
class basic_star_polygon {
 public:
  using point = point2<F>;

  static basic_star_polygon make(std::vector<point> v) {
    if (v.size() < 3) fail(error_kind::degenerate, "fewer than 3 vertices");
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] == v[(i + 1) % n]) fail(error_kind::degenerate, "repeated vertex " + std::to_string(i));
    if (detail::signed_area2(v) == F(0)) fail(error_kind::degenerate, "zero area");
    for (std::size_t i = 0; i < n; ++i) {
      const point e1 = v[(i + 1) % n] - v[i];
      const point e2 = v[(i + 2) % n] - v[(i + 1) % n];
      if (cross(e1, e2) == F(0) && dot(e1, e2) < F(0))
        fail(error_kind::not_simple, "edge folds back at vertex " + std::to_string((i + 1) % n));
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (detail::segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
          fail(error_kind::not_simple,
               "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
    if (detail::signed_area2(v) < F(0)) std::reverse(v.begin(), v.end());
    for (std::size_t i = 0; i < n; ++i)
      if (!(cross(v[i], v[(i + 1) % n]) > F(0)))
        fail(error_kind::not_star_shaped, "edge " + std::to_string(i) + " does not see the origin");
    return basic_star_polygon(std::move(v));
  }

  const std::vector<point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const point& vertex(std::size_t i) const { return v_[i % v_.size()]; }
  const point& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const basic_star_polygon& a, const basic_star_polygon& b) { return a.v_ == b.v_; }

 protected:
  explicit basic_star_polygon(std::vector<point> v) : v_(std::move(v)) {}
  std::vector<point> v_;
};

using StarPolygon = basic_star_polygon<Rational>;

// Star polygon whose turns are all strictly left.
class ConvexPolygon : public StarPolygon {
 public:
  static ConvexPolygon make(std::vector<PointQ> v) { return from(StarPolygon::make(std::move(v))); }

  static ConvexPolygon from(const StarPolygon& p) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const PointQ e1 = p.vertex(i + 1) - v[i];
      const PointQ e2 = p.vertex(i + 2) - p.vertex(i + 1);
      if (cross(e1, e2).sign() <= 0)
        fail(error_kind::not_convex, "vertex " + std::to_string((i + 1) % v.size()) + " is not strictly convex");
    }
    return ConvexPolygon(p);
  }

 private:
  explicit ConvexPolygon(const StarPolygon& p) : StarPolygon(p) {}
};

template <class F>
F area(const basic_star_polygon<F>& p) {
  return detail::signed_area2(p.vertices()) / F(2);
}

template <class F>
basic_star_polygon<F> scaled(const basic_star_polygon<F>& p, const F& c) {
  if (!(c > F(0))) fail(error_kind::invalid_argument, "scale factor must be positive");
  std::vector<point2<F>> v;
  for (const auto& q : p.vertices()) v.push_back(c * q);
  return basic_star_polygon<F>::make(std::move(v));
}

inline ConvexPolygon scaled(const ConvexPolygon& p, const Rational& c) {
  return ConvexPolygon::from(scaled(static_cast<const StarPolygon&>(p), c));
}

// Strictly convex hull vertices in counterclockwise order (monotone chain).
inline std::vector<PointQ> convex_hull_points(std::vector<PointQ> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<PointQ> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline ConvexPolygon convex_hull(const StarPolygon& p) { return ConvexPolygon::make(convex_hull_points(p.vertices())); }

inline bool is_convex(const StarPolygon& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (cross(p.vertex(i + 1) - p.vertex(i), p.vertex(i + 2) - p.vertex(i + 1)).sign() < 0) return false;
  return true;
}

inline Rational support(const StarPolygon& c, const PointQ& w) {
  Rational best = dot(c[0], w);
  for (const auto& p : c.vertices()) best = max(best, dot(p, w));
  return best;
}

inline Rational support(const StarPolygon& c, const Direction& w) { return support(c, w.vec()); }

// Minkowski gauge: the t > 0 with x / t on the boundary.
template <class F>
F gauge(const basic_star_polygon<F>& p, const point2<F>& x) {
  if (x.x == F(0) && x.y == F(0)) return F(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p.vertex(i);
    const auto d = p.vertex(i + 1) - a;
    const F den = cross(x, d);
    if (den == F(0)) continue;
    const F s = cross(a, d) / den;
    const F u = cross(a, x) / den;
    if (s > F(0) && u >= F(0) && u <= F(1)) return F(1) / s;
  }
  // Unreachable for a valid star polygon; floating inputs may graze a vertex
  // within rounding, so take the edge whose hit is nearest its segment.
  F best(-1), miss(-1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p.vertex(i);
    const auto d = p.vertex(i + 1) - a;
    const F den = cross(x, d);
    if (den == F(0)) continue;
    const F s = cross(a, d) / den;
    const F u = cross(a, x) / den;
    if (!(s > F(0))) continue;
    const F off = u < F(0) ? -u : u - F(1);
    if (miss < F(0) || off < miss) {
      miss = off;
      best = F(1) / s;
    }
  }
  return best;
}

inline ConvexPolygon polar_dual(const ConvexPolygon& c) {
  std::vector<PointQ> v;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const PointQ e = c.vertex(i + 1) - c.vertex(i);
    const PointQ n{e.y, -e.x};
    const Rational h = dot(n, c.vertex(i));
    if (h.sign() <= 0) fail(error_kind::origin_not_interior, "edge " + std::to_string(i));
    v.push_back({n.x / h, n.y / h});
  }
  return ConvexPolygon::make(std::move(v));
}

inline Direction edge_normal(const StarPolygon& p, std::size_t i) {
  const PointQ e = p.vertex(i + 1) - p.vertex(i);
  return Direction::of({e.y, -e.x});
}

struct NormalFeature {
  enum class Kind { edge, vertex };

  Kind kind = Kind::edge;
  std::size_t index = 0;  // edge i joins vertices i and i+1
  PointQ anchor;
  PointQ anchor_end;  // equals anchor for vertices
  Direction normal;   // edges only
  Direction arc_from;  // vertices: normal of the incoming edge
  Direction arc_to;    // vertices: normal of the outgoing edge
  bool reflex = false;

  // Short arc as a counterclockwise cone from lo to hi.
  const Direction& lo() const { return reflex ? arc_to : arc_from; }
  const Direction& hi() const { return reflex ? arc_from : arc_to; }
  bool straight() const { return kind == Kind::vertex && arc_from == arc_to; }

  bool arc_contains(const Direction& w) const {
    if (kind == Kind::edge) return w == normal;
    if (straight()) return w == arc_from;
    return sgn(det(lo(), w)) >= 0 && sgn(det(w, hi())) >= 0;
  }

  // Directions are partitioned between features: an edge owns its normal,
  // a vertex owns the open interior of its arc.
  bool owns(const Direction& w) const {
    if (kind == Kind::edge) return w == normal;
    if (straight()) return false;
    return sgn(det(lo(), w)) > 0 && sgn(det(w, hi())) > 0;
  }
};

// Edges 0..n-1 followed by vertices 0..n-1.
inline std::vector<NormalFeature> normal_features(const StarPolygon& p) {
  const std::size_t n = p.size();
  std::vector<NormalFeature> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    NormalFeature f;
    f.kind = NormalFeature::Kind::edge;
    f.index = i;
    f.anchor = p.vertex(i);
    f.anchor_end = p.vertex(i + 1);
    f.normal = edge_normal(p, i);
    out.push_back(f);
  }
  for (std::size_t i = 0; i < n; ++i) {
    NormalFeature f;
    f.kind = NormalFeature::Kind::vertex;
    f.index = i;
    f.anchor = f.anchor_end = p.vertex(i);
    f.arc_from = edge_normal(p, i + n - 1);
    f.arc_to = edge_normal(p, i);
    f.reflex = sgn(det(f.arc_from, f.arc_to)) < 0;
    out.push_back(f);
  }
  return out;
}

inline bool is_centrally_symmetric(const StarPolygon& p) {
  std::vector<PointQ> a = p.vertices(), b;
  for (const auto& q : a) b.push_back(-q);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool is_axis_symmetric(const StarPolygon& p) {
  std::vector<PointQ> a = p.vertices(), b;
  for (const auto& q : a) b.push_back({q.x, -q.y});
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool is_generalized_monotone(const StarPolygon& p) {
  auto ok = [](const PointQ& q, const Direction& w) {
    return (q.x * Rational(w.m)).sign() >= 0 && (q.y * Rational(w.n)).sign() >= 0;
  };
  static const Direction axes[4] = {Direction::make(1, 0), Direction::make(0, 1), Direction::make(-1, 0),
                                    Direction::make(0, -1)};
  for (const auto& f : normal_features(p)) {
    if (f.kind == NormalFeature::Kind::edge) {
      if (!ok(f.anchor, f.normal) || !ok(f.anchor_end, f.normal)) return false;
      continue;
    }
    if (!ok(f.anchor, f.arc_from) || !ok(f.anchor, f.arc_to)) return false;
    for (const auto& a : axes)
      if (f.arc_contains(a) && !ok(f.anchor, a)) return false;
  }
  return true;
}

// Vertices on the circle of radius r at angles close to 2 pi j / n, placed
// exactly on the circle through the rational tangent half-angle map.  Even n
// gives a centrally symmetric polygon.
inline StarPolygon inscribed_ngon(int n, const Rational& r = 1, long denominator = 1000000) {
  if (n < 3) fail(error_kind::invalid_argument, "n-gon needs n >= 3");
  const long double pi = std::acos(-1.0L);
  auto on_circle = [&](long double theta) -> PointQ {
    if (std::fabs(std::fabs(theta) - pi) < 1e-15L) return {-r, Rational(0)};
    long double t = std::tan(theta / 2);
    Rational tq(Integer(std::to_string(std::llround(t * denominator))), Integer(std::to_string(denominator)));
    Rational d = 1 + tq * tq;
    return {r * (1 - tq * tq) / d, r * 2 * tq / d};
  };
  std::vector<PointQ> v;
  if (n % 2 == 0) {
    for (int j = 0; j < n / 2; ++j) v.push_back(on_circle(2 * pi * j / n));
    for (int j = 0; j < n / 2; ++j) v.push_back(-v[j]);
  } else {
    for (int j = 0; j < n; ++j) {
      long double theta = 2 * pi * j / n;
      if (theta > pi) theta -= 2 * pi;
      v.push_back(on_circle(theta));
    }
  }
  return StarPolygon::make(std::move(v));
}

}  // namespace symtorus
