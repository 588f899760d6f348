#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symtorus/symtorus.hpp"

using namespace symtorus;
using io::ordered_json;

namespace {

enum exit_code : int { ok = 0, parse = 2, domain = 3, budget = 4, obstruction = 5 };

struct JobConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  long kmax = 10;
  std::string cutoff;
  unsigned precision_bits = 128;
  std::size_t jobs = 1;
  bool expect_embed = false;
  std::string ball;
  std::string mode = "inclusion";
};

io::json load(const std::string& path) { return io::parse_json(io::read_file(path)); }

const io::json& single_input(const JobConfig& cfg, std::vector<io::json>& docs) {
  if (cfg.inputs.size() != 1) fail(error_kind::invalid_argument, cfg.command + " takes exactly one --input");
  docs.push_back(load(cfg.inputs[0]));
  return docs.back();
}

StarPolygon polygon_of(const io::json& j) { return StarPolygon::make(io::vertices_from(j)); }

// Weight sequence from a weights, ball, region or polygon document.
WeightSequence weights_of(const io::json& j) {
  if (j.contains("head")) return io::weights_from(j);
  if (j.contains("ball")) return WeightSequence{io::rational_from(j["ball"]), {}};
  if (j.contains("region")) return weight_decomposition(io::points_from(j["region"], "region"));
  if (j.contains("vertices")) return weight_decomposition(translated_to_axes(polygon_of(j)));
  throw parse_error("expected one of 'head', 'ball', 'region' or 'vertices'");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

Rational cutoff_for(const JobConfig& cfg, const StarPolygon& p) {
  return cfg.cutoff.empty() ? 2 * sys(p) : Rational::parse(cfg.cutoff);
}

std::string cmd_analyze(const JobConfig& cfg, const io::json& j) {
  const auto p = polygon_of(j);
  if (cfg.format == "svg") return io::polygon_svg(p, orbit_classes(p, cutoff_for(cfg, p)));
  return dump(io::analyze_json(p));
}

std::string cmd_spectrum(const JobConfig& cfg, const io::json& j) {
  const auto p = polygon_of(j);
  const Rational L = cutoff_for(cfg, p);
  if (L.sign() <= 0) fail(error_kind::invalid_argument, "cutoff must be positive");
  if (cfg.format == "svg") return io::polygon_svg(p, orbit_classes(p, L));
  const auto s = spectrum(p, L);
  if (cfg.format == "json") return dump(io::spectrum_json(s));
  return io::spectrum_csv(s);
}

std::string cmd_ech(const JobConfig& cfg, const io::json& j) {
  CapacitySequence s;
  if (j.contains("vertices"))
    s = flat_sequence(ConvexPolygon::from(polygon_of(j)), cfg.kmax, cfg.jobs);
  else if (j.contains("ball"))
    s = ball_sequence(io::rational_from(j["ball"]), cfg.kmax);
  else
    s = gen_toric_sequence(weights_of(j), cfg.kmax);
  if (cfg.format == "json") return dump(io::sequence_json(s));
  return io::sequence_csv(s);
}

std::string cmd_width(const JobConfig&, const io::json& j) {
  const auto W = weights_of(j);
  return dump(io::width_json(W, gromov_width(W)));
}

std::string cmd_embed(const JobConfig& cfg, const io::json& j, int& code) {
  if (cfg.ball.empty()) fail(error_kind::invalid_argument, "embed needs --a");
  const auto W = weights_of(j);
  const auto cert = embed_ball_check(W, Rational::parse(cfg.ball));
  if (cfg.expect_embed && cert.verdict == EmbedVerdict::obstructed) code = obstruction;
  return dump(io::certificate_json(cert));
}

template <class F>
F parse_real(const std::string& s) {
  if constexpr (std::is_floating_point_v<F>) {
    try {
      return std::stold(s);
    } catch (const std::exception&) {
      throw parse_error("bad decimal '" + s + "'");
    }
  } else {
    try {
      return F(s);
    } catch (const std::exception&) {
      throw parse_error("bad decimal '" + s + "'");
    }
  }
}

template <class F>
basic_star_polygon<F> pv_of(const io::json& j) {
  std::vector<F> v;
  for (const auto& x : j["pv"]) {
    if (x.is_number()) v.push_back(F(x.get<double>()));
    else if (x.is_string()) v.push_back(parse_real<F>(x.get<std::string>()));
    else throw parse_error("'pv' entries must be numbers or decimal strings");
  }
  return pv_polygon(v);
}

template <class F>
DistanceValue pv_distance(const io::json& a, const io::json& b) {
  return inclusion_distance(pv_of<F>(a), pv_of<F>(b));
}

std::string cmd_distance(const JobConfig& cfg) {
  if (cfg.inputs.size() != 2) fail(error_kind::invalid_argument, "distance takes two --input files");
  const auto a = load(cfg.inputs[0]), b = load(cfg.inputs[1]);
  const int digits = static_cast<int>(cfg.precision_bits * 0.30103) + 1;
  DistanceValue d;
  if (a.contains("pv") || b.contains("pv")) {
    if (!a.contains("pv") || !b.contains("pv")) fail(error_kind::invalid_argument, "both inputs must be P_v vectors");
    if (cfg.mode == "toric") fail(error_kind::invalid_argument, "P_v inputs are product fibers");
    if (cfg.precision_bits <= 64)
      d = pv_distance<long double>(a, b);
    else if (cfg.precision_bits <= 128)
      d = pv_distance<HighReal>(a, b);
    else
      d = pv_distance<binary_float<256>>(a, b);
    if (cfg.mode == "product") d.mode = "hbm_product";
  } else if (cfg.mode == "toric") {
    auto region = [](const io::json& j) {
      return io::points_from(j.contains("region") ? j["region"] : j["vertices"], "region");
    };
    d = hbm_distance(region(a), region(b), hbm_mode::toric);
  } else {
    d = hbm_distance(io::vertices_from(a), io::vertices_from(b), hbm_mode::product);
    if (cfg.mode == "inclusion") d.mode = "inclusion";
  }
  return dump(io::distance_json(d, std::min(digits, 60)));
}

std::optional<Direction> cylinder_direction(const io::json& c) {
  if (!c.contains("direction")) throw parse_error("cylinder needs 'direction'");
  const auto& v = c["direction"];
  if (v.is_string() && v.get<std::string>() == "irrational") return std::nullopt;
  if (!v.is_array() || v.size() != 2) throw parse_error("direction must be [m, n] or \"irrational\"");
  const Rational m = io::rational_from(v[0]), n = io::rational_from(v[1]);
  if (!m.is_integer() || !n.is_integer()) throw parse_error("direction entries must be integers");
  return Direction::make(m.num(), n.num());
}

std::string cmd_classify(const JobConfig&, const io::json& j) {
  if (j.contains("cylinder")) {
    const auto& c = j["cylinder"];
    return dump(io::verdict_json(tilted_cylinder_capacity(io::rational_from(c.at("r")), cylinder_direction(c))));
  }
  if (j.contains("region")) return dump(io::transfer_json(toric_transfer(io::points_from(j["region"], "region"))));
  const auto p = polygon_of(j);
  auto out = io::classify_json(p);
  if (is_convex(p) && is_centrally_symmetric(p)) out["capacity"] = io::verdict_json(normalized_capacity(p));
  return dump(out);
}

std::string cmd_probe(const JobConfig&, const io::json& j) { return dump(io::probe_json(viterbo_probe(polygon_of(j)))); }

// Formats each command can emit; the first is the default.
const std::map<std::string, std::vector<std::string>> formats{
    {"analyze", {"json", "svg"}},  {"spectrum", {"csv", "json", "svg"}}, {"ech", {"csv", "json"}},
    {"width", {"json"}},           {"embed", {"json"}},                  {"distance", {"json"}},
    {"classify", {"json"}},        {"probe", {"json"}}};

int run(JobConfig cfg) {
  const auto& allowed = formats.at(cfg.command);
  if (cfg.format.empty()) cfg.format = allowed.front();
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end())
    throw parse_error(cfg.command + " does not emit " + cfg.format);
  int code = ok;
  std::vector<io::json> docs;
  std::string out;
  const auto& c = cfg.command;
  if (c == "distance") out = cmd_distance(cfg);
  else if (c == "analyze") out = cmd_analyze(cfg, single_input(cfg, docs));
  else if (c == "spectrum") out = cmd_spectrum(cfg, single_input(cfg, docs));
  else if (c == "ech") out = cmd_ech(cfg, single_input(cfg, docs));
  else if (c == "width") out = cmd_width(cfg, single_input(cfg, docs));
  else if (c == "embed") out = cmd_embed(cfg, single_input(cfg, docs), code);
  else if (c == "classify") out = cmd_classify(cfg, single_input(cfg, docs));
  else if (c == "probe") out = cmd_probe(cfg, single_input(cfg, docs));
  if (cfg.output.empty())
    std::cout << out;
  else
    io::write_file(cfg.output, out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symtorus: Reeb dynamics, ECH capacities and distances for domains T^2 x A"};
  app.require_subcommand(1);
  JobConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "systole, volume, ratio and classification of a polygon"},
      {"spectrum", "closed Reeb orbit classes up to a cutoff action"},
      {"ech", "ECH capacity sequence of a polygon, weight sequence or ball"},
      {"width", "Gromov width of a concave toric target"},
      {"embed", "ball embedding certificate"},
      {"distance", "inclusion / homological Banach-Mazur distance"},
      {"classify", "subclass flags and capacity verdicts"},
      {"probe", "compare Gromov width with twice the systole"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", cfg.inputs, "input JSON file(s)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    sub->add_option("-f,--format", cfg.format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--kmax", cfg.kmax, "largest ECH index")->check(CLI::PositiveNumber);
    sub->add_option("--cutoff", cfg.cutoff, "spectrum action cutoff as p/q");
    sub->add_option("--precision-bits", cfg.precision_bits, "float precision for P_v inputs")
        ->check(CLI::Range(53u, 4096u));
    sub->add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-a,--a", cfg.ball, "ball capacity a as p/q");
    sub->add_option("--mode", cfg.mode, "inclusion | product | toric")
        ->check(CLI::IsMember({"inclusion", "product", "toric"}));
    sub->add_flag("--expect-embed", cfg.expect_embed, "exit 5 when an obstruction is found");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? ok : parse;
  }
  try {
    return run(cfg);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == error_kind::non_terminating || e.kind() == error_kind::tail_bound_fails) return budget;
    return domain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain;
  }
}
