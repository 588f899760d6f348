#pragma once

#include <utility>
#include <vector>

#include "symtorus/geometry.hpp"
#include "symtorus/rational.hpp"

namespace symtorus {

namespace detail {

// (s, t) with s*a + t*b = 1 for coprime a, b.
inline std::pair<Integer, Integer> bezout(const Integer& a, const Integer& b) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g < 0) {
    s = -s;
    t = -t;
  }
  return {s, t};
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

struct ConeMinimum {
  Rational value;
  Direction argmin;
};

// Minimum of w.v over nonzero integer w in the closed cone from lo to hi
// (counterclockwise, det(lo, hi) >= 0).  v must be positive on the cone.
//
// Walks the Hilbert basis of the cone, which runs along the boundary of the
// convex hull of its nonzero lattice points.  A linear function is unimodal
// along that boundary, so the walk stops at the first strict increase.
inline ConeMinimum cone_minimum(const Direction& lo, const Direction& hi, const PointQ& v) {
  ConeMinimum best{dot(lo, v), lo};
  if (lo == hi) return best;
  Direction h = lo;
  Rational fh = best.value;
  while (h != hi) {
    auto [s, t] = detail::bezout(h.m, h.n);
    const Integer w0x = -t, w0y = s;  // det(h, w0) = 1
    const Integer dh = det(h, hi);
    const Integer dw = w0x * hi.n - w0y * hi.m;
    const Integer k = detail::ceil_div(Integer(-dw), dh);
    Direction next = Direction::make(Integer(w0x + k * h.m), Integer(w0y + k * h.n));
    const Rational fn = dot(next, v);
    if (fn > fh) break;
    if (fn < best.value) best = {fn, next};
    h = next;
    fh = fn;
  }
  return best;
}

// All primitive w in the cone from lo to hi with w.v <= bound, sorted by
// value then direction.  With open_ends the two boundary rays are excluded.
inline std::vector<std::pair<Direction, Rational>> cone_directions(const Direction& lo, const Direction& hi,
                                                                    const PointQ& v, const Rational& bound,
                                                                    bool open_ends) {
  std::vector<std::pair<Direction, Rational>> out;
  const Rational alpha = dot(lo, v);
  if (lo == hi) {
    if (!open_ends && alpha <= bound) out.emplace_back(lo, alpha);
    return out;
  }
  // Unimodular change of basis sending lo to (1,0) and hi to (c,d), d > 0.
  auto [s, t] = detail::bezout(lo.m, lo.n);
  const Integer c = s * hi.m + t * hi.n;
  const Integer d = det(lo, hi);
  const PointQ e2{Rational(Integer(-t)), Rational(s)};
  const Rational beta = dot(e2, v);
  const Rational fhi = dot(hi, v);
  const Integer ymax = (bound * Rational(d) / fhi).floor();
  for (Integer y = 0; y <= ymax; ++y) {
    Integer x = y == 0 ? Integer(1) : detail::ceil_div(Integer(c * y), d);
    for (;; ++x) {
      const Rational f = alpha * Rational(x) + beta * Rational(y);
      if (f > bound) break;
      if (y == 0 && x != 1) break;
      if (gcd(x, y) != 1) continue;
      const bool on_lo = y == 0;
      const bool on_hi = x * d == c * y;
      if (open_ends && (on_lo || on_hi)) continue;
      out.emplace_back(Direction::make(Integer(lo.m * x - t * y), Integer(lo.n * x + s * y)), f);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second < b.second || (a.second == b.second && a.first < b.first);
  });
  return out;
}

}  // namespace symtorus
