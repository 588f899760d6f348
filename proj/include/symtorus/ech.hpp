#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "symtorus/errors.hpp"
#include "symtorus/geometry.hpp"
#include "symtorus/rational.hpp"
#include "symtorus/reeb.hpp"

namespace symtorus {

using PointZ = point2<Integer>;

// Largest d >= 0 with d(d+1)/2 <= k.
inline long ball_index(long k) {
  if (k < 0) fail(error_kind::invalid_argument, "capacity index must be >= 0");
  long d = static_cast<long>(std::sqrt(2.0 * static_cast<double>(k)));
  while (d > 0 && d * (d + 1) / 2 > k) --d;
  while ((d + 1) * (d + 2) / 2 <= k) ++d;
  return d;
}

inline Rational ball_capacity(const Rational& a, long k) {
  if (a.sign() <= 0) fail(error_kind::invalid_argument, "ball size must be positive");
  return a * Rational(ball_index(k));
}

namespace detail {

inline long tri(long d) { return d * (d + 1) / 2; }

struct ScaledRationals {
  Integer den{1};
  std::vector<Integer> nums;
};

inline ScaledRationals scale_to_integers(const std::vector<Rational>& xs) {
  ScaledRationals s;
  for (const auto& x : xs) s.den = lcm(s.den, x.den());
  for (const auto& x : xs) s.nums.push_back(x.num() * (s.den / x.den()));
  return s;
}

// f[k] = max sum a_i d_i over d with sum tri(d_i) <= k, for k = 0..K.
template <class T>
std::vector<T> union_dp(const std::vector<T>& a, long K) {
  std::vector<T> f(K + 1, T(0)), g(K + 1);
  for (const T& w : a) {
    for (long k = 0; k <= K; ++k) {
      T best = f[k];
      for (long d = 1; tri(d) <= k; ++d) {
        T v = f[k - tri(d)] + w * T(d);
        if (v > best) best = v;
      }
      g[k] = best;
    }
    f.swap(g);
  }
  return f;
}

inline bool fits_int64(const Integer& x) { return abs(x) < (Integer(1) << 62); }

inline bool int64_safe(const ScaledRationals& s, long K) {
  Integer total = 0;
  for (const auto& n : s.nums) total += abs(n);
  return fits_int64(Integer(total * (ball_index(K) + 1)));
}

// Union capacities in units of 1/den for k = 0..K.
inline std::vector<Integer> scaled_union_sequence(const ScaledRationals& s, long K) {
  std::vector<Integer> out;
  if (int64_safe(s, K)) {
    std::vector<long long> a;
    for (const auto& n : s.nums) a.push_back(n.get_si());
    for (long long v : union_dp(a, K)) out.emplace_back(static_cast<long>(v));
  } else {
    out = union_dp(s.nums, K);
  }
  return out;
}

}  // namespace detail

struct UnionResult {
  Rational value;
  std::vector<long> d;  // multiplicities in input order
};

// Exact branch and bound.  A branch is cut once partial + sqrt(2 r sum a_j^2)
// over the remaining weights cannot beat the incumbent; ties keep the first
// tuple found, scanning weights by decreasing size and d downwards.
inline UnionResult union_capacity_detail(const std::vector<Rational>& weights, long k) {
  if (k < 0) fail(error_kind::invalid_argument, "capacity index must be >= 0");
  for (const auto& w : weights)
    if (w.sign() <= 0) fail(error_kind::invalid_argument, "weights must be positive");
  const std::size_t n = weights.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[b] < weights[a]; });
  std::vector<Rational> tail_sq(n + 1, Rational(0));
  for (std::size_t i = n; i-- > 0;) tail_sq[i] = tail_sq[i + 1] + pow2(weights[order[i]]);

  UnionResult best{Rational(0), std::vector<long>(n, 0)};
  bool found = false;
  std::vector<long> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, long r, const Rational& partial) -> void {
    if (i == n) {
      if (!found || partial > best.value) {
        found = true;
        best.value = partial;
        for (std::size_t j = 0; j < n; ++j) best.d[order[j]] = cur[j];
      }
      return;
    }
    if (found) {
      const Rational gap = best.value - partial;
      if (gap.sign() >= 0 && pow2(gap) >= Rational(2 * r) * tail_sq[i]) return;
    }
    for (long d = ball_index(r); d >= 0; --d) {
      cur[i] = d;
      self(self, i + 1, r - detail::tri(d), partial + weights[order[i]] * Rational(d));
    }
    cur[i] = 0;
  };
  rec(rec, 0, k, Rational(0));
  return best;
}

inline Rational union_capacity(const std::vector<Rational>& weights, long k) {
  return union_capacity_detail(weights, k).value;
}

// union_capacity for every k = 0..K by dynamic programming over the balls.
inline std::vector<Rational> union_capacity_sequence(const std::vector<Rational>& weights, long K) {
  if (K < 0) fail(error_kind::invalid_argument, "capacity index must be >= 0");
  for (const auto& w : weights)
    if (w.sign() <= 0) fail(error_kind::invalid_argument, "weights must be positive");
  const auto s = detail::scale_to_integers(weights);
  std::vector<Rational> out;
  out.reserve(K + 1);
  for (const auto& v : detail::scaled_union_sequence(s, K)) out.emplace_back(v, s.den);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice polygons and flat capacities

class LatticePolygon {
 public:
  LatticePolygon() = default;

  // Convex hull of the given integer points.
  static LatticePolygon make(const std::vector<PointZ>& pts) {
    if (pts.empty()) fail(error_kind::degenerate, "empty lattice polygon");
    std::vector<PointQ> q;
    for (const auto& p : pts) q.push_back({Rational(p.x), Rational(p.y)});
    LatticePolygon out;
    for (const auto& p : convex_hull_points(std::move(q))) out.v_.push_back({p.x.num(), p.y.num()});
    return out;
  }

  const std::vector<PointZ>& vertices() const { return v_; }
  bool is_point() const { return v_.size() == 1; }
  bool is_segment() const { return v_.size() == 2; }

 private:
  std::vector<PointZ> v_;
};

inline Integer lattice_count(const LatticePolygon& L) {
  const auto& v = L.vertices();
  if (v.size() == 1) return 1;
  if (v.size() == 2) return gcd(Integer(v[1].x - v[0].x), Integer(v[1].y - v[0].y)) + 1;
  Integer twice_area = 0, boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice_area += a.x * b.y - a.y * b.x;
    boundary += gcd(Integer(b.x - a.x), Integer(b.y - a.y));
  }
  // Pick: area = I + B/2 - 1, so I + B = (2 area + B)/2 + 1
  return (twice_area + boundary) / 2 + 1;
}

// A-perimeter: sum over boundary edge vectors e of support(A, e).
inline Rational lattice_perimeter(const StarPolygon& A, const LatticePolygon& L) {
  const auto& v = L.vertices();
  if (v.size() == 1) return 0;
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += support(A, PointQ{Rational(Integer(b.x - a.x)), Rational(Integer(b.y - a.y))});
  }
  return s;
}

struct FlatResult {
  Rational value;
  LatticePolygon minimizer;
};

namespace detail {

// Convex lattice polygons up to translation are increasing-angle sequences
// of edge vectors summing to zero, started at the edge of least angle.
template <class T>
struct FlatSearch {
  struct Cand {
    T x, y, c, h;
  };
  std::vector<std::array<T, 2>> verts;  // A scaled to integers
  std::vector<Cand> cands;
  T target{};  // 2 area + boundary points of an admissible polygon
  T ub{};
  bool found = false;
  T best{};
  std::vector<std::size_t> best_edges, cur;

  T support(const T& x, const T& y) const {
    T s = verts[0][0] * x + verts[0][1] * y;
    for (const auto& v : verts) {
      T t = v[0] * x + v[1] * y;
      if (t > s) s = t;
    }
    return s;
  }

  void dfs(std::size_t from, const T& px, const T& py, const T& per, const T& twice_area, const T& boundary) {
    for (std::size_t j = from; j < cands.size(); ++j) {
      const Cand& c = cands[j];
      const T nx = px + c.x, ny = py + c.y;
      const T na = twice_area + (px * c.y - py * c.x);
      const T nb = boundary + c.c;
      // fan areas from the start vertex and boundary counts only grow
      if (na + nb > target) continue;
      const T nper = per + c.h;
      const bool closed = nx == T(0) && ny == T(0);
      const T lower = closed ? nper : T(nper + support(T(-nx), T(-ny)));
      if (found ? !(lower < best) : lower > ub) continue;
      cur.push_back(j);
      if (closed) {
        if (na + nb == target) {
          found = true;
          best = nper;
          best_edges = cur;
        }
      } else {
        dfs(j + 1, nx, ny, nper, na, nb);
      }
      cur.pop_back();
    }
  }

  void run_shard(std::size_t shard, std::size_t jobs) {
    for (std::size_t j = shard; j < cands.size(); j += jobs) {
      const Cand& c = cands[j];
      if (c.c > target) continue;
      cur.assign(1, j);
      if (found ? !(c.h + support(T(-c.x), T(-c.y)) < best) : c.h + support(T(-c.x), T(-c.y)) > ub) continue;
      dfs(j + 1, c.x, c.y, c.h, T(0), c.c);
    }
    cur.clear();
  }
};

inline bool angle_less_z(long x1, long y1, long x2, long y2) {
  auto half = [](long x, long y) { return y < 0 || (y == 0 && x < 0); };
  const bool h1 = half(x1, y1), h2 = half(x2, y2);
  if (h1 != h2) return !h1;
  return x1 * y2 - y1 * x2 > 0;
}

template <class T>
FlatResult flat_search(const std::vector<std::array<Integer, 2>>& verts, const Integer& den,
                       const std::vector<std::array<long, 4>>& cands, long k, const Integer& ub, std::size_t jobs) {
  auto conv = [](const Integer& z) {
    if constexpr (std::is_same_v<T, long long>)
      return static_cast<long long>(z.get_si());
    else
      return T(z);
  };
  std::vector<FlatSearch<T>> shards(jobs);
  for (auto& s : shards) {
    for (const auto& v : verts) s.verts.push_back({conv(v[0]), conv(v[1])});
    s.target = T(2 * k);
    s.ub = conv(ub);
  }
  for (auto& s : shards) {
    for (const auto& c : cands) {
      T x = T(c[0]), y = T(c[1]);
      s.cands.push_back({x, y, T(c[2]), s.support(x, y)});
    }
  }
  if (jobs == 1) {
    shards[0].run_shard(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back([&, i] { shards[i].run_shard(i, jobs); });
    for (auto& t : pool) t.join();
  }
  const FlatSearch<T>* win = nullptr;
  for (const auto& s : shards) {
    if (!s.found) continue;
    if (!win || s.best < win->best || (s.best == win->best && s.best_edges < win->best_edges)) win = &s;
  }
  if (!win) return {};
  std::vector<PointZ> pts;
  long px = 0, py = 0;
  for (std::size_t j : win->best_edges) {
    pts.push_back({Integer(px), Integer(py)});
    px += cands[j][0];
    py += cands[j][1];
  }
  Integer b;
  if constexpr (std::is_same_v<T, long long>)
    b = Integer(static_cast<long>(win->best));
  else
    b = win->best;
  return {Rational(b, den), LatticePolygon::make(pts)};
}

}  // namespace detail

// Minimal A-perimeter over convex lattice polygons with exactly k+1 lattice
// points.  A must be centrally symmetric so that support(A, .) is a norm.
inline FlatResult flat_capacity_detail(const ConvexPolygon& A, long k, std::size_t jobs = 1) {
  if (!is_centrally_symmetric(A)) fail(error_kind::not_centrally_symmetric, "flat capacities need a symmetric fiber");
  if (k < 0) fail(error_kind::invalid_argument, "capacity index must be >= 0");
  if (k == 0) return {Rational(0), LatticePolygon::make({{Integer(0), Integer(0)}})};
  if (jobs == 0) jobs = 1;

  // Upper bound from the segment [0, k w] along a systole direction.
  const Rational s = sys(A);
  const Rational ub = 2 * Rational(k) * s;
  // support(A, (x,y)) >= max(|x| / gauge(e1), |y| / gauge(e2)) since A
  // contains the diamond through its axis points; edges cost at most ub/2.
  const long X = (ub * gauge(A, PointQ{1, 0}) / 2).floor().get_si();
  const long Y = (ub * gauge(A, PointQ{0, 1}) / 2).floor().get_si();

  Integer den = 1;
  for (const auto& v : A.vertices()) den = lcm(den, lcm(v.x.den(), v.y.den()));
  std::vector<std::array<Integer, 2>> verts;
  for (const auto& v : A.vertices())
    verts.push_back({Integer(v.x.num() * (den / v.x.den())), Integer(v.y.num() * (den / v.y.den()))});
  const Integer ub_scaled = (ub * Rational(den)).num();

  std::vector<std::array<long, 4>> cands;  // x, y, lattice length, unused
  for (long x = -X; x <= X; ++x)
    for (long y = -Y; y <= Y; ++y) {
      if (x == 0 && y == 0) continue;
      if (2 * support(A, PointQ{x, y}) > ub) continue;
      cands.push_back({x, y, gcd(Integer(x), Integer(y)).get_si(), 0});
    }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a[0] * b[1] - a[1] * b[0] == 0 && a[0] * b[0] + a[1] * b[1] > 0) return a[2] < b[2];
    return detail::angle_less_z(a[0], a[1], b[0], b[1]);
  });

  Integer maxv = abs(ub_scaled) + 1;
  for (const auto& v : verts) maxv = std::max(maxv, Integer(abs(v[0]) + abs(v[1])));
  const bool small = detail::fits_int64(Integer(maxv * (X + Y + 1) * 4)) && X < (1L << 20) && Y < (1L << 20) &&
                     detail::fits_int64(Integer(Integer(X + Y + 1) * (X + Y + 1) * 64 * (k + 1)));
  FlatResult r = small ? detail::flat_search<long long>(verts, den, cands, k, ub_scaled, jobs)
                       : detail::flat_search<Integer>(verts, den, cands, k, ub_scaled, jobs);
  if (r.minimizer.vertices().empty()) fail(error_kind::non_terminating, "flat search found no admissible polygon");
  return r;
}

inline Rational flat_capacity(const ConvexPolygon& A, long k, std::size_t jobs = 1) {
  return flat_capacity_detail(A, k, jobs).value;
}

// Squared Wulff bound: flat_capacity(A, k)^2 >= 2 area(A) (k - 1).
inline Rational wulff_lower_bound(const ConvexPolygon& A, long k) {
  if (k < 1) fail(error_kind::invalid_argument, "k must be >= 1");
  return 2 * area(A) * Rational(k - 1);
}

// ---------------------------------------------------------------------------
// Weight sequences

struct WeightSequence {
  Rational head;
  std::vector<Rational> weights;  // sorted decreasing

  void normalize() { std::sort(weights.begin(), weights.end(), [](const Rational& a, const Rational& b) { return b < a; }); }

  Rational weights_square_sum() const {
    Rational s = 0;
    for (const auto& w : weights) s += pow2(w);
    return s;
  }

  std::string str() const {
    std::string s = "(" + head.str() + ";";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + weights[i].str();
    return s + ")";
  }

  friend bool operator==(const WeightSequence& a, const WeightSequence& b) {
    return a.head == b.head && a.weights == b.weights;
  }
};

inline void validate(const WeightSequence& W) {
  if (W.head.sign() <= 0) fail(error_kind::invalid_argument, "head must be positive");
  for (const auto& w : W.weights) {
    if (w.sign() <= 0) fail(error_kind::invalid_argument, "weights must be positive");
    if (w > W.head) fail(error_kind::invalid_argument, "weight exceeds head");
  }
}

namespace detail {

// Region under a convex decreasing polyline from (a,0) to (0,c), with the
// corner at the origin.  Removes the largest standard triangle and recurses
// on the two leftover corners after moving each to standard position.
inline void concave_weights(std::vector<PointQ> curve, std::vector<Rational>& out, long& budget) {
  curve.erase(std::unique(curve.begin(), curve.end()), curve.end());
  if (curve.size() < 2) return;
  if (curve.front().x.sign() == 0 || curve.back().y.sign() == 0) return;
  if (--budget < 0) fail(error_kind::non_terminating, "weight expansion exceeded its step budget");
  Rational w = curve[0].x + curve[0].y;
  for (const auto& p : curve) w = min(w, p.x + p.y);
  std::size_t first = curve.size(), last = 0;
  for (std::size_t i = 0; i < curve.size(); ++i)
    if (curve[i].x + curve[i].y == w) {
      first = std::min(first, i);
      last = i;
    }
  out.push_back(w);
  std::vector<PointQ> right, left;
  for (std::size_t i = 0; i <= first; ++i) right.push_back({curve[i].x + curve[i].y - w, curve[i].y});
  for (std::size_t i = last; i < curve.size(); ++i) left.push_back({curve[i].x, curve[i].x + curve[i].y - w});
  concave_weights(std::move(right), out, budget);
  concave_weights(std::move(left), out, budget);
}

}  // namespace detail

// Ball-packing weights of a convex region touching both coordinate axes:
// the smallest triangle x + y <= b containing it, minus the concave corner
// regions, each expanded into standard triangles.
inline WeightSequence weight_decomposition(const std::vector<PointQ>& omega, long budget = 100000) {
  for (const auto& p : omega)
    if (p.x.sign() < 0 || p.y.sign() < 0) fail(error_kind::not_in_positive_quadrant, "vertex outside the quadrant");
  const std::vector<PointQ> v = convex_hull_points(omega);
  if (v.size() < 3) fail(error_kind::degenerate, "region has empty interior");
  const std::size_t n = v.size();
  Rational b = 0, minx = v[0].x, miny = v[0].y;
  for (const auto& p : v) {
    b = max(b, p.x + p.y);
    minx = min(minx, p.x);
    miny = min(miny, p.y);
  }
  if (minx.sign() != 0 || miny.sign() != 0)
    fail(error_kind::invalid_argument, "region must touch both coordinate axes");

  auto pick = [&](auto pred, auto better) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (pred(v[i]) && (best == n || better(v[i], v[best]))) best = i;
    return best;
  };
  auto on_x = [](const PointQ& p) { return p.y.sign() == 0; };
  auto on_y = [](const PointQ& p) { return p.x.sign() == 0; };
  auto on_h = [&](const PointQ& p) { return p.x + p.y == b; };
  auto less_x = [](const PointQ& a, const PointQ& c) { return a.x < c.x; };
  auto more_x = [](const PointQ& a, const PointQ& c) { return a.x > c.x; };
  auto less_y = [](const PointQ& a, const PointQ& c) { return a.y < c.y; };
  auto more_y = [](const PointQ& a, const PointQ& c) { return a.y > c.y; };
  const std::size_t x0 = pick(on_x, less_x), x1 = pick(on_x, more_x);
  const std::size_t y0 = pick(on_y, less_y), y1 = pick(on_y, more_y);
  const std::size_t h1 = pick(on_h, more_x), h2 = pick(on_h, less_x);

  auto chain = [&](std::size_t from, std::size_t to) {
    std::vector<PointQ> c{v[from]};
    for (std::size_t i = from; i != to;) {
      i = (i + 1) % n;
      c.push_back(v[i]);
    }
    return c;
  };

  WeightSequence W{b, {}};
  if (x0 != y0) {
    auto c = chain(y0, x0);
    std::reverse(c.begin(), c.end());
    detail::concave_weights(c, W.weights, budget);
  }
  if (x1 != h1) {
    std::vector<PointQ> c;
    for (const auto& p : chain(x1, h1)) c.push_back({b - p.x - p.y, p.y});
    detail::concave_weights(c, W.weights, budget);
  }
  if (h2 != y1) {
    std::vector<PointQ> c;
    for (const auto& p : chain(h2, y1)) c.push_back({p.x, b - p.x - p.y});
    detail::concave_weights(c, W.weights, budget);
  }
  W.normalize();
  return W;
}

// Translate a fiber so its hull touches both axes from inside the quadrant.
inline std::vector<PointQ> translated_to_axes(const StarPolygon& A) {
  std::vector<PointQ> h = convex_hull_points(A.vertices());
  Rational mx = h[0].x, my = h[0].y;
  for (const auto& p : h) {
    mx = min(mx, p.x);
    my = min(my, p.y);
  }
  for (auto& p : h) p = {p.x - mx, p.y - my};
  return h;
}

// ---------------------------------------------------------------------------
// Capacities of generalized convex toric domains

struct GenToricValue {
  Rational value;
  long argmin_l = 0;
  bool clamped = false;  // the raw minimum was negative
};

namespace detail {

// Smallest l0 with b(sqrt(2l + 9/4) - 3/2) - sqrt(2(l - k) S) > best for all
// l >= l0, via sqrt(2l)(b - sqrt S) - 3b/2 > best.
inline long gen_toric_horizon(const Rational& b, const Rational& S, const Rational& best) {
  const Rational s_hi = sqrt_bounds(S, 64).second;
  if (!(b > s_hi)) fail(error_kind::invalid_argument, "head^2 must exceed the sum of squared weights");
  const Rational r = (max(best, Rational(0)) + 3 * b / 2) / (b - s_hi);
  return (pow2(r) / 2).floor().get_si() + 1;
}

inline GenToricValue gen_toric_from_table(const WeightSequence& W, long k, const std::vector<Rational>& U, long L) {
  GenToricValue v{ball_capacity(W.head, k), k, false};
  for (long l = k; l <= L; ++l) {
    const Rational c = ball_capacity(W.head, l) - U[l - k];
    if (c < v.value) {
      v.value = c;
      v.argmin_l = l;
    }
  }
  if (v.value.sign() < 0) {
    v.value = 0;
    v.clamped = true;
  }
  return v;
}

}  // namespace detail

// c_k = min over l >= k of c_l(B(b)) - max_{sum k_i = l - k} sum c_{k_i}(B(w_i)).
// The inner maximum is the union capacity of the weights at l - k.
inline GenToricValue gen_toric_detail(const WeightSequence& W, long k) {
  validate(W);
  if (k < 0) fail(error_kind::invalid_argument, "capacity index must be >= 0");
  if (W.weights.empty()) return {ball_capacity(W.head, k), k, false};
  const Rational S = W.weights_square_sum();
  const long L = std::max(k, detail::gen_toric_horizon(W.head, S, ball_capacity(W.head, k)));
  const auto U = union_capacity_sequence(W.weights, L - k);
  return detail::gen_toric_from_table(W, k, U, L);
}

inline Rational gen_toric_capacity(const WeightSequence& W, long k) { return gen_toric_detail(W, k).value; }

struct CapacitySequence {
  std::map<long, Rational> values;
  std::string source;  // ball | union | flat | gen_toric
  bool clamped = false;
};

inline CapacitySequence ball_sequence(const Rational& a, long kmax) {
  CapacitySequence s{{}, "ball"};
  for (long k = 0; k <= kmax; ++k) s.values[k] = ball_capacity(a, k);
  return s;
}

inline CapacitySequence union_sequence(const std::vector<Rational>& w, long kmax) {
  CapacitySequence s{{}, "union"};
  const auto u = union_capacity_sequence(w, kmax);
  for (long k = 0; k <= kmax; ++k) s.values[k] = u[k];
  return s;
}

inline CapacitySequence flat_sequence(const ConvexPolygon& A, long kmax, std::size_t jobs = 1) {
  CapacitySequence s{{}, "flat"};
  for (long k = 0; k <= kmax; ++k) s.values[k] = flat_capacity(A, k, jobs);
  return s;
}

inline CapacitySequence gen_toric_sequence(const WeightSequence& W, long kmax) {
  validate(W);
  CapacitySequence s{{}, "gen_toric"};
  if (W.weights.empty()) return ball_sequence(W.head, kmax);
  const Rational S = W.weights_square_sum();
  long L = kmax;
  for (long k = 0; k <= kmax; ++k) L = std::max(L, detail::gen_toric_horizon(W.head, S, ball_capacity(W.head, k)));
  const auto U = union_capacity_sequence(W.weights, L);
  for (long k = 0; k <= kmax; ++k) {
    const long Lk = std::max(k, detail::gen_toric_horizon(W.head, S, ball_capacity(W.head, k)));
    auto v = detail::gen_toric_from_table(W, k, U, Lk);
    s.values[k] = v.value;
    s.clamped = s.clamped || v.clamped;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Ball embeddings

struct CremonaResult {
  Rational head;
  std::vector<Rational> weights;  // reduced vector, sorted decreasing
  long steps = 0;
  bool embeds = false;
};

// Cremona moves (b; a1, a2, a3, ...) -> (b + d; a1 + d, a2 + d, a3 + d, ...)
// with d = b - a1 - a2 - a3 < 0, until the vector is reduced (d >= 0).  The
// balls fit iff the reduced vector is nonnegative and b^2 >= sum a_i^2.
inline CremonaResult cremona_reduction(const Rational& b, std::vector<Rational> a, long budget = 1000000) {
  CremonaResult r{b, std::move(a), 0, false};
  while (r.weights.size() < 3) r.weights.push_back(0);
  auto desc = [](const Rational& x, const Rational& y) { return y < x; };
  for (;;) {
    std::sort(r.weights.begin(), r.weights.end(), desc);
    if (r.weights.back().sign() < 0 || r.head.sign() < 0) return r;
    const Rational d = r.head - r.weights[0] - r.weights[1] - r.weights[2];
    if (d.sign() >= 0) break;
    if (++r.steps > budget) fail(error_kind::non_terminating, "Cremona reduction exceeded its step budget");
    r.head += d;
    for (int i = 0; i < 3; ++i) r.weights[i] += d;
  }
  Rational vol = 0;
  for (const auto& w : r.weights) vol += pow2(w);
  r.embeds = pow2(r.head) >= vol;
  return r;
}

enum class EmbedVerdict { embeds, obstructed };

inline std::string to_string(EmbedVerdict v) { return v == EmbedVerdict::embeds ? "embeds" : "obstructed"; }

struct EmbeddingCertificate {
  WeightSequence target;
  Rational ball;
  long explicit_k_max = 0;
  std::vector<bool> checked;  // checked[k] for k = 0..explicit_k_max
  long tail_bound_k = 0;
  std::string tail_method;  // analytic | cremona | none
  EmbedVerdict verdict = EmbedVerdict::obstructed;
  std::optional<long> witness_k;
  Rational witness_union;
  Rational witness_ball;
  double runtime_ms = 0;
};

// Least K such that sqrt(2kS) <= b(sqrt(2k + 9/4) - 3/2) for every k >= K.
// Squaring twice reduces it to 2k (b^2 - S)^2 >= 9 b^2 S.  Empty if b^2 <= S.
inline std::optional<Integer> tail_threshold(const Rational& b, const Rational& S) {
  const Rational gap = pow2(b) - S;
  if (gap.sign() <= 0) return std::nullopt;
  return (9 * pow2(b) * S / (2 * pow2(gap))).ceil();
}

namespace detail {

// First k <= K with union(weights)(k) > ball(b)(k); fills checked.
inline std::optional<long> first_violation(const WeightSequence& W, const Rational& a, long K,
                                           EmbeddingCertificate& cert) {
  std::vector<Rational> all = W.weights;
  all.push_back(a);
  const auto U = union_capacity_sequence(all, K);
  cert.checked.assign(K + 1, false);
  for (long k = 0; k <= K; ++k) {
    const Rational B = ball_capacity(W.head, k);
    if (U[k] > B) {
      cert.witness_union = U[k];
      cert.witness_ball = B;
      return k;
    }
    cert.checked[k] = true;
  }
  return std::nullopt;
}

}  // namespace detail

inline EmbeddingCertificate embed_ball_check(const WeightSequence& W, const Rational& a, long k_limit = 4000000) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(W);
  if (a.sign() <= 0) fail(error_kind::invalid_argument, "ball size must be positive");
  EmbeddingCertificate cert;
  cert.target = W;
  cert.ball = a;
  const Rational S = W.weights_square_sum() + pow2(a);
  const Rational b2 = pow2(W.head);

  auto finish = [&](EmbedVerdict v) {
    cert.verdict = v;
    cert.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
  };
  auto scan_for_witness = [&](long from) -> bool {
    for (long K = std::max(from, 64L); K <= k_limit; K *= 2) {
      cert.explicit_k_max = K;
      if (auto w = detail::first_violation(W, a, K, cert)) {
        cert.witness_k = *w;
        return true;
      }
      if (K > k_limit / 2) break;
    }
    return false;
  };

  if (b2 > S) {
    const Integer K = *tail_threshold(W.head, S);
    if (K > k_limit) fail(error_kind::non_terminating, "tail threshold " + K.get_str() + " exceeds the k limit");
    cert.explicit_k_max = std::max(K.get_si(), 0L);
    cert.tail_bound_k = cert.explicit_k_max;
    cert.tail_method = "analytic";
    if (auto w = detail::first_violation(W, a, cert.explicit_k_max, cert)) {
      cert.witness_k = *w;
      return finish(EmbedVerdict::obstructed);
    }
    return finish(EmbedVerdict::embeds);
  }

  if (b2 == S) {
    // full volume: the analytic tail degenerates, Cremona reduction decides
    std::vector<Rational> all = W.weights;
    all.push_back(a);
    const auto cr = cremona_reduction(W.head, all);
    const long K = 2048;
    cert.explicit_k_max = K;
    if (auto w = detail::first_violation(W, a, K, cert)) {
      cert.witness_k = *w;
      cert.tail_method = "none";
      return finish(EmbedVerdict::obstructed);
    }
    if (cr.embeds) {
      cert.tail_bound_k = K;
      cert.tail_method = "cremona";
      return finish(EmbedVerdict::embeds);
    }
    cert.tail_method = "none";
    if (scan_for_witness(2 * K)) return finish(EmbedVerdict::obstructed);
    fail(error_kind::non_terminating, "Cremona obstruction has no witness below the k limit");
  }

  cert.tail_method = "none";
  if (scan_for_witness(64)) return finish(EmbedVerdict::obstructed);
  fail(error_kind::tail_bound_fails, "ball volume exceeds the target (b^2 = " + b2.str() + " < " + S.str() +
                                         ") and no witness was found below the k limit");
}

struct GromovWidth {
  Rational value;  // exact width, or a certified lower bound
  bool exact = false;
  Rational upper;  // equals value when exact
  std::string method;  // thresholds | volume | bisection
  long k_range = 0;
};

namespace detail {

// min over k <= K and d >= 1 of (c_k(B(b)) - U(k - tri(d))) / d, the largest a
// for which every capacity constraint with index <= K holds.
inline Rational width_threshold(const WeightSequence& W, long K) {
  std::vector<Rational> all = W.weights;
  all.push_back(W.head);
  const auto s = scale_to_integers(all);
  std::vector<Integer> ws(s.nums.begin(), s.nums.end() - 1);
  const Integer bs = s.nums.back();
  const auto U = scaled_union_sequence({s.den, ws}, K);
  std::optional<std::pair<Integer, long>> best;  // numerator over d
  for (long k = 1; k <= K; ++k) {
    const Integer B = bs * ball_index(k);
    if (U[k] > B) fail(error_kind::invalid_argument, "the weights alone do not fit in the head triangle");
    for (long d = 1; tri(d) <= k; ++d) {
      const Integer x = B - U[k - tri(d)];
      if (!best || x * best->second < best->first * d) best = {x, d};
    }
  }
  return Rational(best->first, Integer(best->second) * s.den);
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  const Integer n = isqrt(x.num()), d = isqrt(x.den());
  if (n * n == x.num() && d * d == x.den()) return Rational(n, d);
  return std::nullopt;
}

}  // namespace detail

// Largest a with embed_ball_check(W, a) embeds.  The width is the minimum of
// the per-constraint thresholds, confirmed by the analytic tail at that
// value; at full volume the Cremona criterion confirms instead.
inline GromovWidth gromov_width(const WeightSequence& W, long k_limit = 4000000) {
  validate(W);
  const Rational sq = W.weights_square_sum();
  const Rational V = pow2(W.head) - sq;
  if (V.sign() <= 0) fail(error_kind::invalid_argument, "no volume left for a ball");
  long K = 64;
  Rational t;
  while (K <= k_limit) {
    t = detail::width_threshold(W, K);
    if (pow2(t) < V) {
      const Integer need = *tail_threshold(W.head, sq + pow2(t));
      if (need <= K) return {t, true, t, "thresholds", K};
      if (need > k_limit) break;
      K = need.get_si();
      continue;
    }
    if (auto r = detail::exact_sqrt(V)) {
      std::vector<Rational> all = W.weights;
      all.push_back(*r);
      if (cremona_reduction(W.head, all).embeds) return {*r, true, *r, "volume", K};
    } else {
      break;
    }
    K *= 2;
  }
  // Bisection over dyadic candidates below min(t, sqrt V).
  Rational hi = min(t, sqrt_bounds(V, 64).second), lo = 0;
  for (int it = 0; it < 40; ++it) {
    const Rational mid = (lo + hi) / 2;
    bool ok = false;
    try {
      ok = embed_ball_check(W, mid, k_limit).verdict == EmbedVerdict::embeds;
    } catch (const error& e) {
      if (e.kind() != error_kind::non_terminating && e.kind() != error_kind::tail_bound_fails) throw;
    }
    (ok ? lo : hi) = mid;
  }
  return {lo, false, hi, "bisection", K};
}

}  // namespace symtorus
