#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symtorus/capacities.hpp"
#include "symtorus/distances.hpp"
#include "symtorus/ech.hpp"
#include "symtorus/errors.hpp"
#include "symtorus/geometry.hpp"
#include "symtorus/rational.hpp"
#include "symtorus/reeb.hpp"

namespace symtorus::io {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(error_kind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points one past the offending character
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error("malformed JSON", line, col);
  }
}

inline Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw parse_error("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline json to_json(const Rational& q) { return q.str(); }

inline std::vector<PointQ> points_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw parse_error(std::string("'") + what + "' must be an array of [x, y] pairs");
  std::vector<PointQ> v;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw parse_error(std::string("each entry of '") + what + "' must be [x, y]");
    v.push_back({rational_from(p[0]), rational_from(p[1])});
  }
  return v;
}

inline std::vector<PointQ> vertices_from(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw parse_error("polygon file needs a 'vertices' array");
  return points_from(j["vertices"], "vertices");
}

inline WeightSequence weights_from(const json& j) {
  if (!j.is_object() || !j.contains("head") || !j.contains("weights"))
    throw parse_error("weights file needs 'head' and 'weights'");
  WeightSequence W;
  W.head = rational_from(j["head"]);
  if (!j["weights"].is_array()) throw parse_error("'weights' must be an array");
  for (const auto& w : j["weights"]) W.weights.push_back(rational_from(w));
  W.normalize();
  validate(W);
  return W;
}

inline ordered_json points_json(const std::vector<PointQ>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& p : v) a.push_back({p.x.str(), p.y.str()});
  return a;
}

inline ordered_json weights_json(const WeightSequence& W) {
  ordered_json w = ordered_json::array();
  for (const auto& x : W.weights) w.push_back(x.str());
  return {{"head", W.head.str()}, {"weights", w}};
}

inline ordered_json analyze_json(const StarPolygon& p) {
  const auto f = classify(p);
  const auto h = hull_sys_bound(p);
  return {{"vertices", points_json(p.vertices())},
          {"sys", sys(p).str()},
          {"volume", volume(p).str()},
          {"sys_ratio", f.sys_ratio.str()},
          {"ruelle", ruelle_invariant(p).str()},
          {"hull_sys", h.sys_hull.str()},
          {"hull_ratio_bound", h.ratio_bound.str()},
          {"is_product", f.is_product},
          {"fiber_convex", f.fiber_convex},
          {"fiber_centrally_symmetric", f.fiber_centrally_symmetric},
          {"generalized_monotone", f.generalized_monotone},
          {"dynamically_convex", f.dynamically_convex},
          {"systolically_convex", f.systolically_convex}};
}

inline ordered_json classify_json(const StarPolygon& p) {
  const auto f = classify(p);
  return {{"is_product", f.is_product},
          {"fiber_convex", f.fiber_convex},
          {"fiber_centrally_symmetric", f.fiber_centrally_symmetric},
          {"generalized_monotone", f.generalized_monotone},
          {"dynamically_convex", f.dynamically_convex},
          {"systolically_convex", f.systolically_convex},
          {"sys_ratio", f.sys_ratio.str()}};
}

inline const char* kind_name(NormalFeature::Kind k) { return k == NormalFeature::Kind::edge ? "edge" : "vertex"; }

inline std::string spectrum_csv(const Spectrum& s) {
  std::string out = "action,kind,feature_index,direction_m,direction_n,cover\n";
  for (const auto& [action, classes] : s.actions)
    for (const auto& c : classes)
      out += action.str() + "," + kind_name(c.kind) + "," + std::to_string(c.element) + "," + c.direction.m.get_str() +
             "," + c.direction.n.get_str() + "," + std::to_string(c.cover) + "\n";
  return out;
}

inline ordered_json spectrum_json(const Spectrum& s) {
  ordered_json rows = ordered_json::array();
  for (const auto& [action, classes] : s.actions)
    for (const auto& c : classes)
      rows.push_back({{"action", action.str()},
                      {"kind", kind_name(c.kind)},
                      {"feature_index", c.element},
                      {"direction", {c.direction.m.get_str(), c.direction.n.get_str()}},
                      {"cover", c.cover}});
  return {{"cutoff", s.cutoff.str()}, {"orbits", rows}};
}

inline std::string sequence_csv(const CapacitySequence& s, long kmin = 1) {
  std::string out = "k,value_num,value_den,source\n";
  for (const auto& [k, v] : s.values) {
    if (k < kmin) continue;
    out += std::to_string(k) + "," + v.num().get_str() + "," + v.den().get_str() + "," + s.source + "\n";
  }
  return out;
}

inline ordered_json sequence_json(const CapacitySequence& s, long kmin = 1) {
  ordered_json rows = ordered_json::array();
  for (const auto& [k, v] : s.values)
    if (k >= kmin) rows.push_back({{"k", k}, {"value", v.str()}});
  return {{"source", s.source}, {"clamped", s.clamped}, {"values", rows}};
}

inline ordered_json certificate_json(const EmbeddingCertificate& c) {
  ordered_json j{{"target", c.target.str()},
                 {"weights", weights_json(c.target)},
                 {"a", c.ball.str()},
                 {"K", c.tail_bound_k},
                 {"explicit_k_max", c.explicit_k_max},
                 {"tail_method", c.tail_method},
                 {"verdict", to_string(c.verdict)}};
  if (c.witness_k) {
    j["witness_k"] = *c.witness_k;
    j["witness_target"] = c.witness_union.str();
    j["witness_ball"] = c.witness_ball.str();
  }
  j["runtime_ms"] = c.runtime_ms;
  return j;
}

inline ordered_json width_json(const WeightSequence& W, const GromovWidth& g) {
  return {{"target", W.str()},  {"value", g.value.str()}, {"exact", g.exact},
          {"upper", g.upper.str()}, {"method", g.method},   {"k_range", g.k_range}};
}

inline ordered_json verdict_json(const CapacityVerdict& v) {
  ordered_json j;
  switch (v.kind) {
    case CapacityVerdict::Kind::exact: j["value"] = v.value.str(); break;
    case CapacityVerdict::Kind::squared: j["value"] = {{"squared", v.value.str()}}; break;
    case CapacityVerdict::Kind::infinite: j["value"] = "inf"; break;
    case CapacityVerdict::Kind::interval: j["value"] = {{"interval", {v.lo.str(), v.hi.str()}}}; break;
  }
  j["rule"] = v.rule;
  if (v.sys) j["sys"] = v.sys->str();
  if (v.rho) j["rho"] = v.rho->str();
  j["decimal"] = v.decimal();
  return j;
}

inline ordered_json distance_json(const DistanceValue& d, int digits = 20) {
  return {{"C", d.C_str()}, {"log", std::stod(real_str(d.log_value, 17))},
          {"log_decimal", real_str(d.log_value, digits)}, {"exact", d.exact}, {"mode", d.mode}};
}

inline ordered_json probe_json(const ViterboProbe& p) {
  return {{"width", p.width.value.str()}, {"width_exact", p.width.exact}, {"sys", p.sys.str()},
          {"two_sys", (2 * p.sys).str()}, {"gap", p.gap},                 {"message", p.message}};
}

inline ordered_json transfer_json(const ToricTransferReport& r) {
  return {{"monotone", r.monotone},
          {"weights", weights_json(r.weights)},
          {"ball_normalized", r.ball_normalized.value.str()},
          {"ball_normalized_exact", r.ball_normalized.exact},
          {"cube_normalized", r.cube_normalized.str()},
          {"statement", r.statement}};
}

// Polygon in a 512x512 viewBox with arrows along the normals of the orbit
// classes below the cutoff, and a legend listing them.
inline std::string polygon_svg(const StarPolygon& p, const std::vector<OrbitClass>& classes) {
  long double lo = 0, hi = 0;
  for (const auto& v : p.vertices()) {
    lo = std::min({lo, v.x.to_long_double(), v.y.to_long_double()});
    hi = std::max({hi, v.x.to_long_double(), v.y.to_long_double()});
  }
  const long double r = std::max(-lo, hi);
  const long double scale = 200.0L / r;
  auto X = [&](long double x) { return 256.0L + scale * x; };
  auto Y = [&](long double y) { return 256.0L - scale * y; };
  char buf[256];
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\" width=\"512\" height=\"512\">\n"
      "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n"
      "<line x1=\"0\" y1=\"256\" x2=\"512\" y2=\"256\" stroke=\"#ccc\"/>\n"
      "<line x1=\"256\" y1=\"0\" x2=\"256\" y2=\"512\" stroke=\"#ccc\"/>\n<polygon points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.3Lf,%.3Lf", i ? " " : "", X(p[i].x.to_long_double()),
                  Y(p[i].y.to_long_double()));
    out += buf;
  }
  out += "\" fill=\"#e8f0fe\" stroke=\"#1a56db\" stroke-width=\"2\"/>\n";
  int row = 0;
  for (const auto& c : classes) {
    if (c.cover != 1) continue;
    const long double m = c.direction.m.get_d(), n = c.direction.n.get_d();
    const long double len = std::sqrt(m * m + n * n);
    const long double x0 = X(c.base_point.x.to_long_double()), y0 = Y(c.base_point.y.to_long_double());
    const long double x1 = x0 + 28 * m / len, y1 = y0 - 28 * n / len;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.3Lf\" y1=\"%.3Lf\" x2=\"%.3Lf\" y2=\"%.3Lf\" stroke=\"#c81e1e\" stroke-width=\"1.5\"/>\n"
                  "<circle cx=\"%.3Lf\" cy=\"%.3Lf\" r=\"2.5\" fill=\"#c81e1e\"/>\n",
                  x0, y0, x1, y1, x1, y1);
    out += buf;
    std::snprintf(buf, sizeof buf, "<text x=\"8\" y=\"%d\" font-size=\"11\" font-family=\"monospace\">%s %s</text>\n",
                  16 + 13 * row++, c.direction.str().c_str(), c.action().str().c_str());
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace symtorus::io
