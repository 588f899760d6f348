#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "symtorus/errors.hpp"

namespace symtorus {

using Integer = mpz_class;

// Exact rational in lowest terms with positive denominator.  A thin value
// wrapper over mpq_class so that no expression templates leak into `auto`.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(Integer(std::to_string(v))) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(error_kind::invalid_argument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "p/q" and plain decimals such as "-1.25".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw parse_error("empty rational literal");
    s = s.substr(b, e - b + 1);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw parse_error("bad rational literal '" + s + "'");
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      if (digits.empty() || digits == "-") throw parse_error("bad rational literal '" + s + "'");
      Integer num;
      if (num.set_str(digits, 10) != 0) throw parse_error("bad rational literal '" + s + "'");
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return Rational(num, den);
    }
    auto slash = s.find('/');
    Integer num, den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0) throw parse_error("bad rational literal '" + s + "'");
    if (slash != std::string::npos) {
      std::string d = s.substr(slash + 1);
      if (d.empty() || d[0] == '-' || d[0] == '+' || den.set_str(d, 10) != 0)
        throw parse_error("bad rational literal '" + s + "'");
      if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  double to_double() const { return q_.get_d(); }
  long double to_long_double() const {
    if (is_zero()) return 0.0L;
    Integer n = q_.get_num(), d = q_.get_den();
    if (n < 0) n = -n;
    long shift = 72 - static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) +
                 static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    Integer scaled = shift >= 0 ? Integer(n << shift) / d : Integer(n / Integer(d << -shift));
    long double v = 0.0L;
    for (std::size_t i = mpz_size(scaled.get_mpz_t()); i-- > 0;)
      v = v * 18446744073709551616.0L + static_cast<long double>(mpz_getlimbn(scaled.get_mpz_t(), i));
    v = std::ldexp(v, static_cast<int>(-shift));
    return sign() < 0 ? -v : v;
  }

  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(error_kind::invalid_argument, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0) fail(error_kind::invalid_argument, "square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Dyadic enclosure lo <= sqrt(x) <= hi with hi - lo <= 2^-bits.
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& x, unsigned bits = 64) {
  if (x.sign() < 0) fail(error_kind::invalid_argument, "square root of a negative rational");
  Integer scale = Integer(1) << bits;
  Integer scaled = (x.num() * scale * scale) / x.den();
  Integer r = isqrt(scaled);
  Rational lo(r, scale);
  Rational hi = lo * lo == x ? lo : Rational(r + 1, scale);
  return {lo, hi};
}

inline Rational pow2(const Rational& r) { return r * r; }

}  // namespace symtorus

template <>
struct std::hash<symtorus::Rational> {
  std::size_t operator()(const symtorus::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
