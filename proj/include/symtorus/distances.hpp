#pragma once

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symtorus/errors.hpp"
#include "symtorus/geometry.hpp"
#include "symtorus/rational.hpp"

namespace symtorus {

template <unsigned Bits>
using binary_float =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
                                  boost::multiprecision::et_off>;

// Working precision for transcendental inputs; comparisons use float_tolerance.
using HighReal = binary_float<128>;
inline constexpr double float_tolerance = 1e-12;

template <class F>
F to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<F>) {
    return static_cast<F>(q.to_long_double());
  } else {
    return F(q.num().get_str()) / F(q.den().get_str());
  }
}

template <class F>
std::string real_str(const F& x, int digits = 20) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

struct DistanceValue {
  std::optional<Rational> exact_C;  // set when both inputs are rational
  HighReal C{1};
  HighReal log_value{0};
  bool exact = false;
  std::string mode = "inclusion";  // inclusion | hbm_product | hbm_toric

  std::string C_str() const { return exact_C ? exact_C->str() : real_str(C, 30); }
};

namespace detail {

// Points of the edge a -> b where it crosses rays through the vertices of B.
template <class F>
void ray_cuts(const point2<F>& a, const point2<F>& b, const basic_star_polygon<F>& B, std::vector<point2<F>>& out) {
  const point2<F> d = b - a;
  for (const auto& r : B.vertices()) {
    const F den = cross(d, r);
    if (den == F(0)) continue;
    const F u = cross(r, a) / den;
    if (u <= F(0) || u >= F(1)) continue;
    const point2<F> p = a + u * d;
    if (dot(p, r) > F(0)) out.push_back(p);
  }
}

}  // namespace detail

// max of gauge(B, p) over the boundary of A.  Between consecutive rays through
// vertices of B the gauge is linear, so the maximum sits at a cut point.
template <class F>
F max_gauge_on_boundary(const basic_star_polygon<F>& A, const basic_star_polygon<F>& B) {
  F best(0);
  std::vector<point2<F>> cuts;
  for (std::size_t i = 0; i < A.size(); ++i) {
    cuts.clear();
    cuts.push_back(A.vertex(i));
    detail::ray_cuts(A.vertex(i), A.vertex(i + 1), B, cuts);
    for (const auto& p : cuts) {
      const F g = gauge(B, p);
      if (g > best) best = g;
    }
  }
  return best;
}

// Smallest C >= 1 with A in C B and B in C A.
template <class F>
F inclusion_scale(const basic_star_polygon<F>& A, const basic_star_polygon<F>& B) {
  const F ab = max_gauge_on_boundary(A, B);
  const F ba = max_gauge_on_boundary(B, A);
  return ab > ba ? ab : ba;
}

inline DistanceValue inclusion_distance(const StarPolygon& A, const StarPolygon& B) {
  DistanceValue d;
  d.exact_C = inclusion_scale(A, B);
  d.exact = true;
  d.C = to_real<HighReal>(*d.exact_C);
  d.log_value = log(d.C);
  return d;
}

template <class F>
DistanceValue inclusion_distance(const basic_star_polygon<F>& A, const basic_star_polygon<F>& B) {
  DistanceValue d;
  const F c = inclusion_scale(A, B);
  if constexpr (std::is_floating_point_v<F>) {
    d.C = HighReal(static_cast<long double>(c));
  } else {
    d.C = HighReal(c);
  }
  d.log_value = log(d.C);
  return d;
}

// 2N vertices e^{v_j} (cos(pi(j-1)/N), sin(pi(j-1)/N)) and their negatives.
template <class F>
basic_star_polygon<F> pv_polygon(const std::vector<F>& v) {
  using std::cos, std::exp, std::sin;
  const std::size_t n = v.size();
  if (n < 2) fail(error_kind::invalid_argument, "P_v needs N >= 2");
  const F pi = boost::math::constants::pi<F>();
  std::vector<point2<F>> pts(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const F t = pi * F(static_cast<long>(j)) / F(static_cast<long>(n));
    const F r = exp(v[j]);
    if (!(r > F(0)) || !(r < std::numeric_limits<F>::max()))
      fail(error_kind::not_star_shaped, "radius e^v out of range at index " + std::to_string(j));
    pts[j] = {r * cos(t), r * sin(t)};
    pts[j + n] = -pts[j];
  }
  return basic_star_polygon<F>::make(std::move(pts));
}

template <class F>
F sup_distance(const std::vector<F>& v, const std::vector<F>& w) {
  using std::abs;
  if (v.size() != w.size()) fail(error_kind::invalid_argument, "vectors differ in length");
  F best(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (abs(v[i] - w[i]) > best) best = abs(v[i] - w[i]);
  return best;
}

enum class hbm_mode { product, toric };

namespace detail {

// A region in the closed positive quadrant, reflected across both axes.
// Radial dilation commutes with the reflections, so inclusion scales agree.
inline StarPolygon quadrant_double(const std::vector<PointQ>& omega) {
  for (const auto& p : omega)
    if (p.x.sign() < 0 || p.y.sign() < 0) fail(error_kind::not_in_positive_quadrant, "vertex outside the quadrant");
  std::vector<PointQ> v = omega;
  if (detail::signed_area2(v).sign() < 0) std::reverse(v.begin(), v.end());
  const auto origin = std::find(v.begin(), v.end(), PointQ{});
  if (origin == v.end()) fail(error_kind::invalid_argument, "toric region must have the origin as a vertex");
  std::rotate(v.begin(), origin, v.end());
  std::vector<PointQ> profile(v.begin() + 1, v.end());
  if (profile.size() < 2 || profile.front().y.sign() != 0 || profile.back().x.sign() != 0 ||
      profile.front().x.sign() == 0 || profile.back().y.sign() == 0)
    fail(error_kind::invalid_argument, "toric region must meet both axes away from the origin");
  std::vector<PointQ> out = profile;
  const std::size_t m = profile.size();
  for (std::size_t i = m - 1; i-- > 0;) out.push_back({-profile[i].x, profile[i].y});
  for (std::size_t i = 1; i < m; ++i) out.push_back({-profile[i].x, -profile[i].y});
  for (std::size_t i = m - 1; i-- > 1;) out.push_back({profile[i].x, -profile[i].y});
  return StarPolygon::make(std::move(out));
}

}  // namespace detail

// Homological Banach-Mazur distance of the torus products (or toric domains)
// over A and B; it coincides with the inclusion distance of the bases.
inline DistanceValue hbm_distance(const std::vector<PointQ>& A, const std::vector<PointQ>& B, hbm_mode mode) {
  DistanceValue d;
  if (mode == hbm_mode::product) {
    d = inclusion_distance(StarPolygon::make(A), StarPolygon::make(B));
    d.mode = "hbm_product";
  } else {
    d = inclusion_distance(detail::quadrant_double(A), detail::quadrant_double(B));
    d.mode = "hbm_toric";
  }
  return d;
}

template <class F>
DistanceValue hbm_distance(const basic_star_polygon<F>& A, const basic_star_polygon<F>& B) {
  auto d = inclusion_distance(A, B);
  d.mode = "hbm_product";
  return d;
}

}  // namespace symtorus
