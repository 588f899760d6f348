#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symtorus {

enum class error_kind {
  not_simple,
  not_star_shaped,
  degenerate,
  origin_not_interior,
  point_not_on_boundary,
  non_terminating,
  not_in_positive_quadrant,
  tail_bound_fails,
  not_centrally_symmetric,
  not_convex,
  not_prime,
  not_monotone,
  parse_error,
  invalid_argument,
};

inline std::string_view to_string(error_kind k) {
  switch (k) {
    case error_kind::not_simple: return "NotSimple";
    case error_kind::not_star_shaped: return "NotStarShaped";
    case error_kind::degenerate: return "Degenerate";
    case error_kind::origin_not_interior: return "OriginNotInterior";
    case error_kind::point_not_on_boundary: return "PointNotOnBoundary";
    case error_kind::non_terminating: return "NonTerminating";
    case error_kind::not_in_positive_quadrant: return "NotInPositiveQuadrant";
    case error_kind::tail_bound_fails: return "TailBoundFails";
    case error_kind::not_centrally_symmetric: return "NotCentrallySymmetric";
    case error_kind::not_convex: return "NotConvex";
    case error_kind::not_prime: return "NotPrime";
    case error_kind::not_monotone: return "NotMonotone";
    case error_kind::parse_error: return "ParseError";
    case error_kind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

inline std::ostream& operator<<(std::ostream& os, error_kind k) { return os << to_string(k); }

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : error(error_kind::parse_error, line ? what + " (line " + std::to_string(line) +
                                                   ", column " + std::to_string(column) + ")"
                                            : what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) { throw error(kind, what); }

}  // namespace symtorus
