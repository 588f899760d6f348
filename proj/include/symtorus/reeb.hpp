#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtorus/geometry.hpp"
#include "symtorus/lattice_cone.hpp"
#include "symtorus/rational.hpp"

namespace symtorus {

struct OrbitClass {
  std::size_t feature = 0;  // index into normal_features(P)
  NormalFeature::Kind kind = NormalFeature::Kind::edge;
  std::size_t element = 0;  // edge or vertex index in P
  Direction direction;
  PointQ base_point;
  Rational base_action;
  unsigned long cover = 1;

  Rational action() const { return base_action * Rational(cover); }
};

struct Spectrum {
  Rational cutoff;
  std::vector<std::pair<Rational, std::vector<OrbitClass>>> actions;
};

struct ReebDirection {
  PointQ v;  // normalised so that p.v = 1
  bool closed = true;
  std::optional<Direction> direction;
  Rational period;
};

struct ClassificationFlags {
  bool is_product = true;
  bool fiber_convex = false;
  bool fiber_centrally_symmetric = false;
  bool generalized_monotone = false;
  bool dynamically_convex = true;
  bool systolically_convex = false;
  Rational sys_ratio;
};

inline ReebDirection reeb_direction(const StarPolygon& p, const PointQ& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PointQ& a = p.vertex(i);
    const PointQ& b = p.vertex(i + 1);
    if (q == a || q == b) continue;
    if (!detail::on_segment(q, a, b)) continue;
    const Direction n = edge_normal(p, i);
    const Rational t = dot(n, q);
    return {{Rational(n.m) / t, Rational(n.n) / t}, true, n, t};
  }
  for (const auto& v : p.vertices())
    if (v == q) fail(error_kind::point_not_on_boundary, "point is a vertex; use the vertex normal arc");
  fail(error_kind::point_not_on_boundary, "point is not on an edge");
}

namespace detail {

inline void sort_classes(std::vector<OrbitClass>& cs) {
  std::sort(cs.begin(), cs.end(), [](const OrbitClass& a, const OrbitClass& b) {
    if (a.action() != b.action()) return a.action() < b.action();
    if (a.direction != b.direction) return a.direction < b.direction;
    if (a.feature != b.feature) return a.feature < b.feature;
    return a.cover < b.cover;
  });
}

}  // namespace detail

// Simple orbit classes with base action <= L.  Each primitive direction is
// attributed to exactly one feature: an edge owns its normal, a vertex owns
// the open interior of its normal arc.
inline std::vector<OrbitClass> orbit_classes(const StarPolygon& p, const Rational& L) {
  if (L.sign() <= 0) fail(error_kind::invalid_argument, "cutoff must be positive");
  std::vector<OrbitClass> out;
  const auto features = normal_features(p);
  for (std::size_t fi = 0; fi < features.size(); ++fi) {
    const auto& f = features[fi];
    if (f.kind == NormalFeature::Kind::edge) {
      const Rational a = dot(f.normal, f.anchor);
      if (a <= L) out.push_back({fi, f.kind, f.index, f.normal, f.anchor, a, 1});
      continue;
    }
    if (f.straight()) continue;
    for (auto& [w, a] : cone_directions(f.lo(), f.hi(), f.anchor, L, true))
      out.push_back({fi, f.kind, f.index, w, f.anchor, a, 1});
  }
  detail::sort_classes(out);
  return out;
}

inline Spectrum spectrum(const StarPolygon& p, const Rational& L) {
  std::vector<OrbitClass> all;
  for (const auto& c : orbit_classes(p, L)) {
    const unsigned long kmax = (L / c.base_action).floor().get_ui();
    for (unsigned long k = 1; k <= kmax; ++k) {
      OrbitClass cc = c;
      cc.cover = k;
      all.push_back(cc);
    }
  }
  detail::sort_classes(all);
  Spectrum s{L, {}};
  for (auto& c : all) {
    const Rational a = c.action();
    if (s.actions.empty() || s.actions.back().first != a) s.actions.push_back({a, {}});
    s.actions.back().second.push_back(std::move(c));
  }
  return s;
}

// Minimal base action over all features.
inline Rational sys(const StarPolygon& p) {
  std::optional<Rational> best;
  for (const auto& f : normal_features(p)) {
    Rational a = f.kind == NormalFeature::Kind::edge ? dot(f.normal, f.anchor)
                                                     : cone_minimum(f.lo(), f.hi(), f.anchor).value;
    if (!best || a < *best) best = a;
  }
  return *best;
}

inline Rational volume(const StarPolygon& p) { return 2 * area(p); }

inline Rational sys_ratio(const StarPolygon& p) { return pow2(sys(p)) / volume(p); }

inline ClassificationFlags classify(const StarPolygon& p) {
  ClassificationFlags f;
  f.is_product = true;
  f.fiber_convex = is_convex(p);
  f.fiber_centrally_symmetric = is_centrally_symmetric(p);
  f.generalized_monotone = is_generalized_monotone(p);
  f.dynamically_convex = true;
  f.sys_ratio = sys_ratio(p);
  f.systolically_convex = f.dynamically_convex && f.sys_ratio <= Rational(1, 4);
  return f;
}

inline Rational ruelle_invariant(const StarPolygon&) { return Rational(0); }

struct HullSysBound {
  Rational sys_hull;
  Rational ratio_bound;
};

inline HullSysBound hull_sys_bound(const StarPolygon& p) {
  const ConvexPolygon h = convex_hull(p);
  return {sys(h), area(h) / (3 * area(p))};
}

// Action of the form base + eps * e, with e a formal positive infinitesimal.
struct FormalAction {
  Rational base;
  Rational eps;

  friend FormalAction operator+(const FormalAction& a, const FormalAction& b) {
    return {a.base + b.base, a.eps + b.eps};
  }
  friend FormalAction operator*(long k, const FormalAction& a) { return {Rational(k) * a.base, Rational(k) * a.eps}; }
  friend bool operator==(const FormalAction& a, const FormalAction& b) { return a.base == b.base && a.eps == b.eps; }
  friend bool operator<(const FormalAction& a, const FormalAction& b) {
    return a.base < b.base || (a.base == b.base && a.eps < b.eps);
  }
  friend bool operator<=(const FormalAction& a, const FormalAction& b) { return !(b < a); }

  bool positive() const { return base.sign() > 0 || (base.sign() == 0 && eps.sign() > 0); }

  std::string str() const {
    if (eps.is_zero()) return base.str();
    std::string e = abs(eps) == 1 ? "eps" : abs(eps).str() + "*eps";
    if (base.is_zero()) return (eps.sign() < 0 ? "-" : "") + e;
    return base.str() + (eps.sign() < 0 ? "-" : "+") + e;
  }
};

enum class OrbitKind { elliptic, positive_hyperbolic, negative_hyperbolic };

inline std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::elliptic: return "elliptic";
    case OrbitKind::positive_hyperbolic: return "positive_hyperbolic";
    case OrbitKind::negative_hyperbolic: return "negative_hyperbolic";
  }
  return "?";
}

struct ZetaFactor {
  FormalAction action;
  OrbitKind kind;
};

struct ZetaTerm {
  FormalAction order;
  Integer coefficient;
};

struct ZetaExpression {
  std::vector<ZetaFactor> factors;
  bool is_trivially_one = true;
  std::optional<ZetaTerm> lowest_term;  // first nonconstant term of the expansion
};

inline ZetaExpression zeta(const StarPolygon&) { return {}; }

// Formal product of (1-t^a)^-1 (elliptic), (1-t^a) (positive hyperbolic) and
// (1+t^a) (negative hyperbolic), expanded far enough to expose its first
// nonconstant term.
inline ZetaExpression zeta_from_orbits(const std::vector<ZetaFactor>& orbits) {
  ZetaExpression z;
  z.factors = orbits;
  z.is_trivially_one = orbits.empty();
  if (orbits.empty()) return z;
  FormalAction horizon{0, 0};
  for (const auto& o : orbits) {
    if (!o.action.positive()) fail(error_kind::invalid_argument, "orbit actions must be positive");
    horizon = horizon + 2 * o.action;
  }
  std::map<FormalAction, Integer> series{{FormalAction{0, 0}, Integer(1)}};
  for (const auto& o : orbits) {
    std::map<FormalAction, Integer> next;
    for (const auto& [order, c] : series) {
      if (o.kind == OrbitKind::elliptic) {
        for (long j = 0;; ++j) {
          FormalAction t = order + j * o.action;
          if (horizon < t) break;
          next[t] += c;
        }
      } else {
        next[order] += c;
        FormalAction t = order + o.action;
        if (t <= horizon) next[t] += o.kind == OrbitKind::positive_hyperbolic ? Integer(-c) : c;
      }
    }
    series.clear();
    for (auto& [k, v] : next)
      if (v != 0) series[k] = v;
  }
  for (const auto& [order, c] : series) {
    if (order == FormalAction{0, 0}) continue;
    z.lowest_term = ZetaTerm{order, c};
    break;
  }
  return z;
}

struct ShearReport {
  Rational epsilon;
  StarPolygon base;
  std::string fiber_family;
  Rational sys;
  Rational volume;
  Rational sys_ratio;
  bool dynamically_convex = true;
  bool is_product = true;
  bool fiber_convex = false;
};

inline ShearReport shear_report(const StarPolygon& p, const Rational& epsilon) {
  ShearReport r{epsilon,
                p,
                "fiber over q2 is M(q2)*A with M(q2) = [[1,0],[-" + epsilon.str() + "*cos(2*pi*q2),1]]",
                sys(p),
                volume(p),
                Rational(0),
                true,
                epsilon.is_zero(),
                is_convex(p)};
  r.sys_ratio = pow2(r.sys) / r.volume;
  return r;
}

}  // namespace symtorus
