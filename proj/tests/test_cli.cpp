#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#include "symtorus/symtorus.hpp"

using namespace symtorus;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(SYMTORUS_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

io::json json_of(const Run& r) { return io::parse_json(r.out); }

StarPolygon load_polygon(const std::string& name) {
  return StarPolygon::make(io::vertices_from(io::parse_json(io::read_file(sample(name)))));
}

std::string without_runtime(const std::string& s) {
  return std::regex_replace(s, std::regex("\"runtime_ms\": [0-9.e+-]+"), "");
}

}  // namespace

TEST(Cli, AnalyzeCrossPolytope) {
  const auto r = cli("analyze -i " + sample("cross_polytope.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["sys_ratio"], "1/4");
  EXPECT_EQ(j["systolically_convex"], true);
}

TEST(Cli, AnalyzeTriangle) {
  const auto j = json_of(cli("analyze -i " + sample("tri_neg.json")));
  EXPECT_EQ(j["sys_ratio"], "1/3");
  EXPECT_EQ(j["fiber_centrally_symmetric"], false);
}

TEST(Cli, MalformedInputReportsPosition) {
  const auto r = cli("analyze -i " + sample("malformed.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("ParseError"), std::string::npos);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("analyze").code, 2);
  EXPECT_EQ(cli("analyze -i " + sample("tri_neg.json") + " -f csv").code, 2);
  EXPECT_EQ(cli("ech -i " + sample("ball_3.json") + " --kmax 0").code, 2);
}

TEST(Cli, DomainErrorExitCode) {
  const auto r = cli("classify -i " + sample("region_l_shape.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("NotMonotone"), std::string::npos);
  EXPECT_EQ(cli("probe -i " + sample("tri_neg.json")).code, 3);
}

TEST(Cli, EchRows) {
  EXPECT_EQ(cli("ech -i " + sample("weights_3_1x6.json") + " --kmax 3").out,
            "k,value_num,value_den,source\n1,2,1,gen_toric\n2,3,1,gen_toric\n3,3,1,gen_toric\n");
  EXPECT_EQ(cli("ech -i " + sample("cross_polytope.json") + " --kmax 2").out,
            "k,value_num,value_den,source\n1,2,1,flat\n2,3,1,flat\n");
  const auto ball = cli("ech -i " + sample("ball_3.json") + " --kmax 9").out;
  EXPECT_NE(ball.find("\n9,9,1,ball\n"), std::string::npos);
}

TEST(Cli, EmbedCertificates) {
  const auto yes = json_of(cli("embed -i " + sample("weights_3_1x6.json") + " -a 3/2"));
  EXPECT_EQ(yes["verdict"], "embeds");
  EXPECT_GE(yes["K"].get<long>(), 593);
  const auto no = cli("embed -i " + sample("weights_3_1x6.json") + " -a 8/5 --expect-embed");
  EXPECT_EQ(no.code, 5);
  EXPECT_EQ(json_of(no)["verdict"], "obstructed");
  EXPECT_TRUE(json_of(no).contains("witness_k"));
  EXPECT_EQ(cli("embed -i " + sample("weights_3_1x6.json") + " -a 8/5").code, 0);
  EXPECT_EQ(json_of(cli("embed -i " + sample("weights_3_1x5.json") + " -a 2"))["verdict"], "embeds");
}

TEST(Cli, RoundTripMatchesLibrary) {
  for (const char* name : {"cross_polytope.json", "tri_neg.json", "notched.json", "hexagon.json"}) {
    const auto p = load_polygon(name);
    const auto j = json_of(cli(std::string("analyze -i ") + sample(name)));
    EXPECT_EQ(io::rational_from(j["sys"]), sys(p)) << name;
    EXPECT_EQ(io::rational_from(j["volume"]), volume(p)) << name;
    EXPECT_EQ(io::rational_from(j["sys_ratio"]), sys_ratio(p)) << name;
    std::vector<PointQ> back = io::points_from(j["vertices"], "vertices");
    EXPECT_EQ(back, p.vertices());
  }
  const auto hex = load_polygon("hexagon.json");
  const auto v = normalized_capacity(hex);
  const auto j = json_of(cli("classify -i " + sample("hexagon.json")));
  EXPECT_EQ(io::rational_from(j["capacity"]["value"]["interval"][0]), v.lo);
  EXPECT_EQ(io::rational_from(j["capacity"]["value"]["interval"][1]), v.hi);
  const auto w = json_of(cli("width -i " + sample("weights_3_1x6.json")));
  EXPECT_EQ(io::rational_from(w["value"]), Rational(3, 2));
  const auto c = json_of(cli("classify -i " + sample("cylinder_11.json")));
  EXPECT_EQ(io::rational_from(c["value"]["squared"]), Rational(8));
}

TEST(Cli, Deterministic) {
  for (const std::string& args :
       {"embed -i " + sample("weights_3_1x6.json") + " -a 3/2", "spectrum -i " + sample("notched.json") + " -f svg",
        "ech -i " + sample("hexagon.json") + " --kmax 6 -j 2", "distance -i " + sample("pv_a.json") + " -i " +
                                                                 sample("pv_b.json")}) {
    const auto a = cli(args), b = cli(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(without_runtime(a.out), without_runtime(b.out)) << args;
  }
}

TEST(Cli, Distances) {
  const auto d = json_of(cli("distance -i " + sample("cross_polytope.json") + " -i " + sample("square.json")));
  EXPECT_EQ(d["C"], "2");
  EXPECT_EQ(d["exact"], true);
  EXPECT_EQ(d["mode"], "inclusion");
  const auto pv = json_of(cli("distance -i " + sample("pv_a.json") + " -i " + sample("pv_b.json") + " --mode product"));
  EXPECT_NEAR(pv["log"].get<double>(), 1.25, 1e-12);
  EXPECT_EQ(pv["mode"], "hbm_product");
  for (const char* bits : {"64", "256"}) {
    const auto q = json_of(cli("distance -i " + sample("pv_a.json") + " -i " + sample("pv_b.json") +
                               " --precision-bits " + bits));
    EXPECT_NEAR(q["log"].get<double>(), 1.25, 1e-12) << bits;
  }
  const auto t = cli("distance -i " + sample("region_square.json") + " -i " + sample("tri_neg.json") + " --mode toric");
  EXPECT_EQ(t.code, 3);
}

TEST(Cli, OutputFile) {
  const std::string path = testing::TempDir() + "symtorus_out.json";
  ASSERT_EQ(cli("probe -i " + sample("cross_polytope.json") + " -o " + path).code, 0);
  const auto j = io::parse_json(io::read_file(path));
  EXPECT_EQ(j["gap"], false);
  EXPECT_EQ(j["two_sys"], "2");
}
