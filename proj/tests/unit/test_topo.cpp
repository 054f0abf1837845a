#include <doctest.h>

#include "helpers.hpp"
#include "nlgraph/checks/generators.hpp"
#include "nlgraph/checks/oracles.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/topo.hpp"

using namespace nlgraph;
using testing::cycle;
using testing::path;

namespace {

const SerreGraph kCircle = make_graph({"r0"}, {{"e0", "r0", "r0"}});

}  // namespace

TEST_CASE("reduce examples") {
  CHECK(reduce(cycle(4)).graph == kCircle);
  CHECK(reduce(cycle(1)).graph == kCircle);
  CHECK(reduce(path(4)).graph == make_graph({"r0", "r1"}, {{"e0", "r0", "r1"}}));
  CHECK(reduce(make_graph({"o"}, {})).graph == make_graph({"r0"}, {}));
  SUBCASE("theta is already reduced") {
    const ReducedForm r = reduce(testing::theta());
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 3);
    CHECK(isomorphism(r.graph, testing::theta()));
    CHECK(is_reduced(testing::theta()));
  }
  SUBCASE("two parallel edges become a loop") {
    const SerreGraph g = make_graph({"a", "b"}, {{"1", "a", "b"}, {"2", "a", "b"}});
    CHECK(reduce(g).graph == kCircle);
  }
  SUBCASE("lollipop keeps its loop") {
    const SerreGraph g = make_graph({"a", "b", "c"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "c"}});
    const SerreGraph r = reduce(g).graph;
    CHECK(r == make_graph({"r0", "r1"}, {{"e0", "r0", "r1"}, {"e1", "r1", "r1"}}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(reduce(SerreGraph{}), GraphError);
    CHECK_THROWS_AS(reduce(make_graph({"a", "b"}, {})), GraphError);
  }
}

TEST_CASE("reduced forms satisfy their invariants") {
  checks::Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const SerreGraph g = checks::random_connected_graph(rng, 12, 5);
    const ReducedForm r = reduce(g);
    CHECK(betti(r.graph) == betti(g));
    CHECK(is_reduced(r.graph));
    CHECK(reduce(r.graph) == r);
    for (const auto& [v, l] : r.graph.vertices()) {
      if (degree(r.graph, v) != 2) continue;
      const auto darts = r.graph.darts_at(v);
      CHECK(r.graph.reverse(darts[0]) == darts[1]);
    }
    const auto sub = random_modifications(g, 1, rng());
    if (std::holds_alternative<Subdivision>(sub.steps[0])) CHECK(isomorphism(reduce(sub.graph).graph, r.graph));
    CHECK(reduce_with_order(g, rng()) == r);
  }
}

TEST_CASE("homeomorphic examples") {
  CHECK(homeomorphic(cycle(3), cycle(7)));
  CHECK(homeomorphic(path(2), path(5)));
  CHECK_FALSE(homeomorphic(testing::fixture("trio/triangles_sharing_vertex.nlg"),
                           testing::fixture("trio/triangles_sharing_side.nlg")));
  CHECK_FALSE(homeomorphic(make_graph({"o"}, {}), path(2)));
  CHECK_FALSE(homeomorphic(path(2), cycle(3)));
  CHECK_FALSE(homeomorphic(path(3), make_graph({"c", "x", "y", "z"}, {{"1", "c", "x"}, {"2", "c", "y"}, {"3", "c", "z"}})));
}

TEST_CASE("equivalent examples") {
  CHECK(equivalent(path(3), testing::fixture("trees/d4.nlg")));
  CHECK(equivalent(testing::fixture("trees/e8.nlg"), make_graph({"o"}, {})));
  CHECK(equivalent(testing::triangle_with_pendant(), cycle(4)));
  CHECK_FALSE(equivalent(testing::fixture("trio/segment_with_triangles.nlg"),
                         testing::fixture("trio/triangles_sharing_vertex.nlg")));
  CHECK_FALSE(equivalent(cycle(3), path(3)));
  CHECK(equivalent(make_graph({"a", "b"}, {{"1", "a", "a"}, {"2", "a", "b"}}), cycle(6)));
}

TEST_CASE("isomorphism implies homeomorphism implies equivalence") {
  checks::Rng rng(5);
  std::vector<SerreGraph> pool;
  for (int k = 0; k < 60; ++k) pool.push_back(checks::random_connected_graph(rng, 7, 3));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (isomorphism(a, b)) CHECK(homeomorphic(a, b));
      if (homeomorphic(a, b)) CHECK(equivalent(a, b));
      CHECK(homeomorphic(a, b) == homeomorphic(b, a));
    }
  }
}

TEST_CASE("elementary modifications preserve equivalence") {
  checks::Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    const SerreGraph g = checks::random_connected_graph(rng, 10, 4);
    const auto m = random_modifications(g, 1, rng());
    CHECK(equivalent(g, m.graph));
    if (!std::holds_alternative<Expansion>(m.steps[0])) CHECK(homeomorphic(g, m.graph));
  }
}

TEST_CASE("homeomorphism agrees with the subdivision oracle on graphs with at most 3 edges") {
  const auto graphs = checks::small_connected_graphs(3);
  checks::SubdivisionOracle oracle(4);
  for (const auto& a : graphs) {
    for (const auto& b : graphs) CHECK(homeomorphic(a, b) == oracle.common_subdivision(a, b));
  }
}

TEST_CASE("chain decomposition") {
  SUBCASE("cycle uses its least vertex") {
    const auto dec = decompose_chains(cycle(4));
    REQUIRE(dec.branch_vertices.size() == 1);
    CHECK(dec.branch_vertices[0] == VertexId("c0"));
    REQUIRE(dec.chains.size() == 1);
    CHECK(dec.chains[0].darts.size() == 4);
  }
  SUBCASE("chains cover every edge once") {
    checks::Rng rng(8);
    for (int k = 0; k < 100; ++k) {
      const SerreGraph g = checks::random_connected_graph(rng, 12, 4);
      const auto dec = decompose_chains(g);
      std::size_t darts = 0;
      std::set<DartId> seen;
      for (const auto& c : dec.chains) {
        REQUIRE_FALSE(c.darts.empty());
        CHECK(g.endpoint(c.darts.front()) == c.from);
        CHECK(g.endpoint(g.reverse(c.darts.back())) == c.to);
        for (const auto& d : c.darts) {
          CHECK(seen.insert(d).second);
          CHECK(seen.insert(g.reverse(d)).second);
        }
        darts += c.darts.size();
      }
      CHECK(darts == g.edge_count());
      CHECK(dec.chains.size() == reduce(g).graph.edge_count());
    }
  }
}
