#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "nlgraph/cli.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/io.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/topo.hpp"

using namespace nlgraph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& rel) { return std::string(NLGRAPH_FIXTURE_DIR) + "/" + rel; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nlgraph_cli_test_" + name)).string();
}

const char* const kTrio[] = {"trio/triangles_sharing_vertex.nlg", "trio/triangles_sharing_side.nlg",
                             "trio/segment_with_triangles.nlg"};

}  // namespace

TEST_CASE("equiv exit codes") {
  CHECK(run({"equiv", fx("trees/e8.nlg"), fx("trees/d4.nlg")}).code == cli::kYes);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Result r = run({"equiv", fx(kTrio[i]), fx(kTrio[j])});
      CHECK(r.code == cli::kNo);
      CHECK(r.out.rfind("not equivalent\n", 0) == 0);
    }
  }
  CHECK(run({"equiv", fx("trees/e8.nlg"), fx("missing.nlg")}).code == cli::kError);
}

TEST_CASE("decisions agree with the library on the fixture corpus") {
  std::vector<std::string> files;
  for (const auto& dir : {"trio", "trees", "cycles", "misc", "nothomeo"}) {
    for (const auto& e : std::filesystem::directory_iterator(fx(dir))) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  for (const auto& a : files) {
    const SerreGraph ga = load_graph(a).graph;
    CHECK(run({"betti", a}).out == std::to_string(betti(ga)) + "\n");
    for (const auto& b : files) {
      const SerreGraph gb = load_graph(b).graph;
      CHECK(run({"equiv", a, b}).code == (equivalent(ga, gb) ? cli::kYes : cli::kNo));
      CHECK(run({"homeo", a, b}).code == (homeomorphic(ga, gb) ? cli::kYes : cli::kNo));
      CHECK(run({"iso", a, b}).code == (isomorphism(ga, gb) ? cli::kYes : cli::kNo));
    }
  }
}

TEST_CASE("certify then verify") {
  const std::string a = fx("misc/triangle_with_pendant.nlg"), b = fx("cycles/c4.nlg");
  for (const std::string report : {"text", "json"}) {
    const std::string cert = temp_path("cert_" + report);
    const Result c = run({"--report", report, "certify", a, b, "-o", cert});
    CHECK(c.code == cli::kYes);
    const Result v = run({"verify", a, b, cert});
    CHECK(v.code == cli::kYes);
    CHECK(v.out == "valid\n");
    std::filesystem::remove(cert);
  }
  SUBCASE("certificate on stdout, verified from stdin") {
    const Result c = run({"certify", a, b});
    REQUIRE(c.code == cli::kYes);
    CHECK(run({"verify", a, b, "-"}, c.out).code == cli::kYes);
  }
  SUBCASE("non-equivalent pair") { CHECK(run({"certify", fx(kTrio[0]), fx(kTrio[1])}).code == cli::kNo); }
  SUBCASE("malformed certificate") {
    const Result v = run({"verify", a, b, "-"}, "nlgraph-certificate 1\nside 1\nsubdivide zz n s t\nside 2\nfinal\n");
    CHECK(v.code == cli::kError);
    CHECK(v.err.find("error") != std::string::npos);
  }
  SUBCASE("wrong certificate") {
    const Result v = run({"verify", a, b, "-"}, "nlgraph-certificate 1\nside 1\nside 2\nfinal\n");
    CHECK(v.code == cli::kNo);
  }
}

TEST_CASE("graph commands") {
  CHECK(run({"validate", fx("cycles/c5.nlg")}).code == cli::kYes);
  CHECK(run({"validate", "-"}, "v a\nv b\n").code == cli::kNo);
  CHECK(run({"validate", "-"}, "v a mult=1\nv b mult=2\ne 1 a b\ne 2 a b\n").code == cli::kNo);
  CHECK(run({"validate", "-"}, "e 1 a b\n").code == cli::kError);
  CHECK(run({"validate", "-"}, "e 1 a b\n").err.find("line 1") != std::string::npos);
  CHECK(run({"core", fx("trees/e6.nlg")}).out == "empty\n");
  const Result core = run({"core", fx("misc/triangle_with_pendant.nlg")});
  CHECK(parse_graph(core.out).graph.vertex_count() == 3);
  CHECK(run({"reduce", fx("cycles/c6.nlg")}).out == "nlgraph 1\nv r0\ne e0 r0 r0\n");
  CHECK(run({"--report", "json", "betti", fx("misc/theta.nlg")}).out.find("\"betti\": 2") != std::string::npos);
}

TEST_CASE("fixture paths and stdin") {
  CHECK(run({"equiv", "@trees/a3.nlg", "@misc/point.nlg"}).code == cli::kYes);
  CHECK(run({"--fixtures", NLGRAPH_FIXTURE_DIR, "betti", "@trio/triangles_sharing_side.nlg"}).out == "2\n");
  CHECK(run({"equiv", "-", "-"}, "v a\nv b\ne 1 a b\n").code == cli::kYes);
}

TEST_CASE("modify") {
  const std::string g = fx("trio/triangles_sharing_side.nlg");
  const Result a = run({"--seed", "17", "modify", g, "--random", "6"});
  const Result b = run({"modify", g, "--random", "6", "--seed", "17"});
  CHECK(a.code == cli::kYes);
  CHECK(a.out == b.out);
  CHECK(equivalent(parse_graph(a.out).graph, load_graph(g).graph));
  const Result s = run({"modify", g, "-"}, "expand a n0 t0\nsubdivide 2 n1 s0 s1\n");
  CHECK(s.code == cli::kYes);
  CHECK(parse_graph(s.out).graph.vertex_count() == 6);
  CHECK(run({"modify", g, "-"}, "expand zz n0 t0\n").code == cli::kError);
  CHECK(run({"modify", g}).code == cli::kError);
}

TEST_CASE("blowup") {
  const Result r = run({"blowup", "initial", fx("blowups/mixed.blw")});
  REQUIRE(r.code == cli::kYes);
  const GraphDocument d = parse_graph(r.out);
  CHECK(d.graph.vertex_count() == 5);
  CHECK(d.multiplicity.at(VertexId("v3")) == 2);
  CHECK(run({"blowup", fx("blowups/chain.nlg"), "-"}, "satellite v2 v1\n").out.find("mult=5") != std::string::npos);
  CHECK(run({"blowup", fx("cycles/c3.nlg"), "-"}, "free u1\n").code == cli::kError);
}

TEST_CASE("valuation commands") {
  CHECK(run({"val-eval", "--weights", "1,1", "x1^2 + x1*x2^3"}).out == "2\n");
  CHECK(run({"val-eval", "--weights", "1/2,1/3", "x1*x2"}).out == "5/6\n");
  CHECK(run({"val-eval", "--weights", "2,3", "--ideal", "x1", "x2"}).out == "2\n");
  CHECK(run({"val-eval", "--weights", "2,3", "--normalize"}).out == "1,3/2\n");
  const Result bad = run({"val-eval", "--weights", "0,0", "--normalize"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.find("not in L(A,m)") != std::string::npos);
  CHECK(run({"val-eval", "--spec", "1,2", "--arity", "3", "x2 + x1*x3"}).out == "(0, 1)\n");
  CHECK(run({"val-eval", "--spec", "x1,x2", "--arity", "3", "0"}).out == "+inf\n");
  CHECK(run({"val-pi", "--spec", "1,2,3", "x1", "x3^2 + x1", "5"}).out == "+inf\n2\n0\n");
  CHECK(run({"val-pi", "--spec", "1,2", "--arity", "3", "x1"}).code == cli::kError);
  CHECK(run({"val-pi", "--weights", "2,2", "x1"}).out == "1\n");
  CHECK(run({"val-retract", "--b", "2,3", "--s", "1/4,1/6"}).out == "1/2\n");
  CHECK(run({"val-retract", "--b", "2,3", "--t", "1/2"}).out == "1/4,1/6\n");
  CHECK(run({"val-retract", "--b", "2,3", "--s", "1/2,1/2"}).code == cli::kError);
  CHECK(run({"val-compare", "1,2", "2,1"}).out == "incomparable\nsmaller on x1\nlarger on x2\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kError);
  CHECK(run({"frobnicate"}).code == cli::kError);
  CHECK(run({"equiv", fx("cycles/c3.nlg")}).code == cli::kError);
  CHECK(run({"--report", "xml", "betti", fx("cycles/c3.nlg")}).code == cli::kError);
  CHECK(run({"--help"}).code == cli::kYes);
}

TEST_CASE("corpus-check runs single criteria deterministically") {
  const Result a = run({"corpus-check", "--criterion", "1"});
  const Result b = run({"corpus-check", "--criterion", "1"});
  CHECK(a.code == cli::kYes);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("PASS  C1", 0) == 0);
  CHECK(run({"corpus-check", "--criterion", "12"}).code == cli::kError);
}
