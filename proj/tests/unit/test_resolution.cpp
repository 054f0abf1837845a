#include <doctest.h>

#include "helpers.hpp"
#include "nlgraph/checks/oracles.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/resolution.hpp"
#include "nlgraph/topo.hpp"

using namespace nlgraph;

namespace {

VertexId new_vertex(const DivisorConfig& before, const DivisorConfig& after) {
  for (const auto& [v, l] : after.graph.vertices()) {
    if (!before.graph.has_vertex(v)) return v;
  }
  FAIL("no new vertex");
  return VertexId("");
}

}  // namespace

TEST_CASE("initial configuration") {
  const DivisorConfig c = initial_config();
  CHECK(c.graph.vertex_count() == 1);
  CHECK(c.multiplicity.at(VertexId("v0")) == 1);
  CHECK(betti(c.graph) == 0);
  CHECK(blow_up_free(c, VertexId("v0")).graph.vertex_count() == 2);
}

TEST_CASE("free blow-ups") {
  const DivisorConfig c0 = initial_config();
  const DivisorConfig c1 = blow_up_free(c0, VertexId("v0"));
  CHECK(isomorphism(c1.graph, testing::path(2)));
  for (const auto& [v, b] : c1.multiplicity) CHECK(b == 1);

  SUBCASE("a component of multiplicity 3 spawns another of multiplicity 3") {
    DivisorConfig c = make_config(make_graph({"a", "b"}, {{"1", "a", "b"}}), {{VertexId("a"), 1}, {VertexId("b"), 3}});
    const DivisorConfig d = blow_up_free(c, VertexId("b"));
    CHECK(d.multiplicity.at(new_vertex(c, d)) == 3);
    CHECK(betti(d.graph) == betti(c.graph));
    CHECK(equivalent(c.graph, d.graph));
  }
  SUBCASE("unknown component") { CHECK_THROWS_AS(blow_up_free(c0, VertexId("v9")), ConfigError); }
}

TEST_CASE("satellite blow-ups") {
  SUBCASE("(1, 1) gives 2") {
    const DivisorConfig c = blow_up_free(initial_config(), VertexId("v0"));
    const DivisorConfig d = blow_up_satellite(c, VertexId("v0"), VertexId("v1"));
    CHECK(d.multiplicity.at(new_vertex(c, d)) == 2);
    CHECK(homeomorphic(c.graph, d.graph));
  }
  SUBCASE("(1, 2) gives 3") {
    const DivisorConfig c = make_config(make_graph({"a", "b"}, {{"1", "a", "b"}}), {{VertexId("a"), 1}, {VertexId("b"), 2}});
    const DivisorConfig d = blow_up_satellite(c, VertexId("b"), VertexId("a"));
    CHECK(d.multiplicity.at(new_vertex(c, d)) == 3);
    CHECK(equivalent(c.graph, d.graph));
    CHECK(config_violations(d).empty());
  }
  SUBCASE("errors") {
    const DivisorConfig c = make_config(make_graph({"a", "b", "c"}, {{"1", "a", "b"}, {"2", "b", "c"}}),
                                        {{VertexId("a"), 1}, {VertexId("b"), 2}, {VertexId("c"), 1}});
    CHECK_THROWS_AS(blow_up_satellite(c, VertexId("a"), VertexId("c")), ConfigError);
    CHECK_THROWS_AS(blow_up_satellite(c, VertexId("a"), VertexId("a")), ConfigError);
    CHECK_THROWS_AS(blow_up_satellite(c, VertexId("a"), VertexId("z")), ConfigError);
  }
}

TEST_CASE("configuration rules") {
  CHECK_THROWS_AS(make_config(make_graph({"a"}, {{"1", "a", "a"}}), {{VertexId("a"), 1}}), ConfigError);
  CHECK_THROWS_AS(make_config(make_graph({"a", "b"}, {{"1", "a", "b"}, {"2", "b", "a"}}),
                              {{VertexId("a"), 1}, {VertexId("b"), 1}}),
                  ConfigError);
  CHECK_THROWS_AS(make_config(make_graph({"a", "b"}, {}), {{VertexId("a"), 1}, {VertexId("b"), 1}}), ConfigError);
  CHECK_THROWS_AS(make_config(make_graph({"a"}, {}), {{VertexId("a"), 0}}), ConfigError);
  CHECK_THROWS_AS(make_config(make_graph({"a"}, {}), {}), ConfigError);
}

TEST_CASE("edge skeleton points") {
  const DivisorConfig c = make_config(make_graph({"a", "b"}, {{"1", "a", "b"}}), {{VertexId("a"), 2}, {VertexId("b"), 3}});
  const auto [b1, b2] = edge_skeleton_point(c, VertexId("a"), VertexId("b"), Rational(1, 2));
  CHECK(b1 == Rational(1, 4));
  CHECK(b2 == Rational(1, 6));
  CHECK(b1 * 2 + b2 * 3 == 1);
  const DivisorConfig u = make_config(make_graph({"a", "b"}, {{"1", "a", "b"}}), {{VertexId("a"), 1}, {VertexId("b"), 1}});
  CHECK(edge_skeleton_point(u, VertexId("a"), VertexId("b"), Rational(1, 2)) == std::pair{Rational(1, 2), Rational(1, 2)});
  const DivisorConfig e = make_config(make_graph({"a", "b"}, {{"1", "a", "b"}}), {{VertexId("a"), 1}, {VertexId("b"), 2}});
  CHECK(edge_skeleton_point(e, VertexId("a"), VertexId("b"), 1) == std::pair{Rational(1), Rational(0)});
  CHECK_THROWS_AS(edge_skeleton_point(c, VertexId("a"), VertexId("b"), Rational(3, 2)), ValuationError);
  CHECK(divisorial_weight(c, VertexId("b")) == Rational(1, 3));
}

TEST_CASE("chart oracle reproduces small cases") {
  checks::BlowUpChartOracle oracle;
  CHECK(oracle.multiplicities().at(VertexId("v0")) == 1);
  CHECK(oracle.free(VertexId("v0"), VertexId("v1")) == 1);
  CHECK(oracle.satellite(VertexId("v0"), VertexId("v1"), VertexId("v2")) == 2);
  CHECK(oracle.satellite(VertexId("v2"), VertexId("v1"), VertexId("v3")) == 3);
  CHECK(oracle.free(VertexId("v3"), VertexId("v4")) == 3);
  CHECK(oracle.problems().empty());
}

TEST_CASE("update rules match the chart oracle on all scripts of length 3") {
  std::size_t checked = 0;
  std::function<void(const DivisorConfig&, const checks::BlowUpChartOracle&, int)> walk =
      [&](const DivisorConfig& cfg, const checks::BlowUpChartOracle& o, int depth) {
        if (depth == 0) return;
        for (const auto& [v, l] : cfg.graph.vertices()) {
          const DivisorConfig next = blow_up_free(cfg, v);
          checks::BlowUpChartOracle o2 = o;
          const VertexId f = new_vertex(cfg, next);
          CHECK(o2.free(v, f) == next.multiplicity.at(f));
          ++checked;
          walk(next, o2, depth - 1);
        }
        for (const DartId& d : cfg.graph.edge_representatives()) {
          const VertexId u = cfg.graph.endpoint(d), v = cfg.graph.endpoint(cfg.graph.reverse(d));
          const DivisorConfig next = blow_up_satellite(cfg, u, v);
          checks::BlowUpChartOracle o2 = o;
          const VertexId f = new_vertex(cfg, next);
          CHECK(o2.satellite(u, v, f) == next.multiplicity.at(f));
          CHECK(o2.multiplicities() == next.multiplicity);
          ++checked;
          walk(next, o2, depth - 1);
        }
      };
  walk(initial_config(), checks::BlowUpChartOracle{}, 3);
  CHECK(checked == 1 + 3 + 3 * 5);
}

TEST_CASE("blow-up scripts") {
  const std::vector<BlowUpStep> steps{FreeBlowUp{VertexId("v0")}, SatelliteBlowUp{VertexId("v0"), VertexId("v1")},
                                      SatelliteBlowUp{VertexId("v2"), VertexId("v1")}};
  const DivisorConfig c = apply_blow_ups(initial_config(), steps);
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.multiplicity.at(VertexId("v3")) == 3);
  CHECK(is_tree(c.graph));
}
