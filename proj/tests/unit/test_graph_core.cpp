#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nlgraph/checks/generators.hpp"
#include "nlgraph/checks/oracles.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/modifications.hpp"

using namespace nlgraph;
using testing::cycle;
using testing::path;

TEST_CASE("identifiers order digit runs numerically") {
  CHECK(VertexId("v2") < VertexId("v10"));
  CHECK(VertexId("a") < VertexId("b"));
  CHECK(VertexId("x9") < VertexId("y1"));
  CHECK(VertexId("07") != VertexId("7"));
  CHECK((VertexId("07") < VertexId("7")) != (VertexId("7") < VertexId("07")));
  CHECK(is_plain_identifier("abc_12"));
  CHECK_FALSE(is_plain_identifier("a-b"));
  CHECK_FALSE(is_plain_identifier(""));
  CHECK(conventional_reverse(DartId("e1")) == DartId("~e1"));
  CHECK(conventional_reverse(DartId("~e1")) == DartId("e1"));
}

TEST_CASE("validate") {
  SUBCASE("triangle is well formed") { CHECK(validate(cycle(3)).empty()); }
  SUBCASE("self-reverse dart") {
    const SerreGraph g = SerreGraph::from_parts({{VertexId("a"), ""}}, {{DartId("e"), {DartId("e"), VertexId("a")}}});
    const auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("'e'") != std::string::npos);
  }
  SUBCASE("missing endpoint") {
    const SerreGraph g = SerreGraph::from_parts(
        {{VertexId("a"), ""}}, {{DartId("e"), {DartId("~e"), VertexId("a")}}, {DartId("~e"), {DartId("e"), std::nullopt}}});
    const auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("~e") != std::string::npos);
  }
  SUBCASE("reverse is not an involution") {
    const SerreGraph g = SerreGraph::from_parts({{VertexId("a"), ""}},
                                                {{DartId("x"), {DartId("y"), VertexId("a")}},
                                                 {DartId("y"), {DartId("z"), VertexId("a")}},
                                                 {DartId("z"), {DartId("x"), VertexId("a")}}});
    CHECK_FALSE(validate(g).empty());
  }
  SUBCASE("empty graph") { CHECK(validate(SerreGraph{}).size() == 1); }
  SUBCASE("every valid graph has a fixed-point-free involution") {
    checks::Rng rng(1);
    for (int k = 0; k < 50; ++k) {
      const SerreGraph g = checks::random_connected_graph(rng, 10, 5);
      REQUIRE(validate(g).empty());
      CHECK(g.dart_count() % 2 == 0);
      for (const auto& [d, rec] : g.darts()) {
        CHECK(g.reverse(d) != d);
        CHECK(g.reverse(g.reverse(d)) == d);
      }
    }
  }
}

TEST_CASE("graph mutation rejects clashes") {
  SerreGraph g = cycle(3);
  CHECK_THROWS_AS(g.add_vertex(VertexId("c0")), GraphError);
  CHECK_THROWS_AS(g.add_edge("k0", VertexId("c0"), VertexId("c1")), GraphError);
  CHECK_THROWS_AS(g.add_edge("k9", VertexId("c0"), VertexId("nope")), GraphError);
  CHECK_THROWS_AS(g.remove_vertex(VertexId("c0")), GraphError);
  g.remove_edge(DartId("~k0"));
  CHECK(g.edge_count() == 2);
}

TEST_CASE("degree") {
  CHECK(degree(cycle(3), VertexId("c0")) == 2);
  CHECK(degree(make_graph({"a"}, {{"l", "a", "a"}}), VertexId("a")) == 2);
  CHECK(degree(make_graph({"a"}, {}), VertexId("a")) == 0);
  CHECK_THROWS_AS(degree(cycle(3), VertexId("zz")), GraphError);
}

TEST_CASE("connectivity and betti") {
  CHECK(is_connected(make_graph({"a"}, {})));
  CHECK(is_connected(cycle(3)));
  CHECK_FALSE(is_connected(make_graph({"a", "b"}, {})));
  CHECK(betti(path(5)) == 0);
  CHECK(betti(cycle(3)) == 1);
  CHECK(betti(testing::fixture("trio/triangles_sharing_vertex.nlg")) == 2);
  CHECK(betti(make_graph({"a", "b"}, {})) == 0);
  CHECK(component_count(make_graph({"a", "b", "c"}, {{"1", "a", "b"}})) == 2);
}

TEST_CASE("reduced paths") {
  SUBCASE("path graph") {
    CHECK(enumerate_reduced_paths(path(3), VertexId("p0"), VertexId("p2"), 4).size() == 1);
  }
  SUBCASE("triangle circuits") {
    const auto paths = enumerate_reduced_paths(cycle(3), VertexId("c0"), VertexId("c0"), 3);
    // the length-0 path and the two orientations of the circuit
    REQUIRE(paths.size() == 3);
    CHECK(paths[0].empty());
    CHECK(std::count_if(paths.begin(), paths.end(), [](const DartPath& p) { return p.size() == 3; }) == 2);
  }
  SUBCASE("zero length") {
    const auto paths = enumerate_reduced_paths(cycle(4), VertexId("c1"), VertexId("c1"), 0);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].empty());
  }
  SUBCASE("no backtracking") {
    for (const auto& p : enumerate_reduced_paths(testing::theta(), VertexId("a"), VertexId("b"), 5)) {
      const SerreGraph g = testing::theta();
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        CHECK(p[i + 1] != g.reverse(p[i]));
        CHECK(g.endpoint(p[i + 1]) == g.endpoint(g.reverse(p[i])));
      }
    }
  }
}

TEST_CASE("is_tree") {
  CHECK(is_tree(make_graph({"a"}, {})));
  CHECK_FALSE(is_tree(cycle(3)));
  CHECK(is_tree(path(3)));
  CHECK_FALSE(is_tree(make_graph({"a", "b"}, {})));
}

TEST_CASE("is_tree agrees with the reduced-path definition on all graphs with at most 6 edges") {
  const auto graphs = checks::small_connected_graphs(6);
  CHECK(graphs.size() == 471);
  std::size_t trees = 0;
  for (const auto& g : graphs) {
    const bool oracle = checks::tree_by_reduced_paths(g);
    CHECK(is_tree(g) == oracle);
    trees += oracle;
  }
  // unlabeled trees with 1..7 vertices: 1 + 1 + 1 + 2 + 3 + 6 + 11
  CHECK(trees == 25);
}

TEST_CASE("core") {
  SUBCASE("trees have the empty core") {
    CHECK_FALSE(core(path(6)).has_value());
    CHECK_FALSE(core(testing::fixture("trees/e8.nlg")).has_value());
    CHECK_FALSE(core(make_graph({"a"}, {})).has_value());
  }
  SUBCASE("triangle is its own core") { CHECK(core(cycle(3)) == cycle(3)); }
  SUBCASE("triangle with pendant") {
    const auto c = core(testing::triangle_with_pendant());
    REQUIRE(c);
    CHECK(*c == make_graph({"a", "b", "c"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}}));
  }
  SUBCASE("loop at the end of a path") {
    const auto c = core(make_graph({"a", "b", "c"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "c"}}));
    REQUIRE(c);
    CHECK(*c == make_graph({"c"}, {{"3", "c", "c"}}));
  }
  SUBCASE("disconnected input is rejected") { CHECK_THROWS_AS(core(make_graph({"a", "b"}, {})), GraphError); }
}

TEST_CASE("core properties on random graphs") {
  checks::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const SerreGraph g = checks::random_connected_graph(rng, 12, 4);
    const auto c = core(g);
    CHECK(c.has_value() == !is_tree(g));
    if (!c) continue;
    CHECK(core(*c) == c);
    CHECK(betti(*c) == betti(g));
    for (const auto& [v, l] : c->vertices()) {
      CHECK(degree(*c, v) != 1);
      CHECK(g.has_vertex(v));
    }
    for (const auto& [d, rec] : c->darts()) CHECK(g.darts().at(d) == rec);
    for (int s = 0; s < 3; ++s) CHECK(core_with_order(g, rng()) == c);
  }
}

TEST_CASE("isomorphism examples") {
  SUBCASE("identity is the least witness of a graph with itself") {
    for (const SerreGraph& g : {cycle(5), path(4), testing::fixture("trio/segment_with_triangles.nlg")}) {
      const auto m = isomorphism(g, g);
      REQUIRE(m);
      CHECK(m->vertices == identity_isomorphism(g).vertices);
      CHECK(is_isomorphism(g, g, *m));
    }
  }
  SUBCASE("triangle vs path") { CHECK_FALSE(isomorphism(cycle(3), path(3))); }
  SUBCASE("theta vs triangle") {
    CHECK_FALSE(checks::brute_force_isomorphic(testing::theta(), cycle(3)));
    CHECK_FALSE(isomorphism(testing::theta(), cycle(3)));
  }
  SUBCASE("parallel edges and loops are matched with their multiplicities") {
    const SerreGraph a = make_graph({"x", "y"}, {{"1", "x", "y"}, {"2", "x", "y"}, {"3", "x", "x"}});
    const SerreGraph b = make_graph({"p", "q"}, {{"7", "q", "p"}, {"8", "q", "q"}, {"9", "p", "q"}});
    const auto m = isomorphism(a, b);
    REQUIRE(m);
    CHECK(m->vertices.at(VertexId("x")) == VertexId("q"));
    CHECK(is_isomorphism(a, b, *m));
  }
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
  const auto graphs = checks::small_connected_graphs(4);
  checks::Rng rng(3);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      const auto m = isomorphism(graphs[i], graphs[j]);
      CHECK(m.has_value() == (i == j));
      CHECK(checks::brute_force_isomorphic(graphs[i], graphs[j]) == (i == j));
      if (m) CHECK(is_isomorphism(graphs[i], graphs[j], *m));
    }
  }
}

TEST_CASE("isomorphism is reflexive, symmetric and invariant under relabeling") {
  checks::Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const SerreGraph g = checks::random_connected_graph(rng, 14, 5);
    const auto r = random_modifications(g, 0, 0);
    CHECK(r.graph == g);
    // a relabeled copy: one random relabeling step
    SerreGraph h = g;
    for (std::uint64_t s = rng();; ++s) {
      const auto m = random_modifications(g, 1, s);
      if (std::holds_alternative<Relabeling>(m.steps[0])) {
        h = m.graph;
        break;
      }
    }
    const auto fwd = isomorphism(g, h);
    REQUIRE(fwd);
    CHECK(is_isomorphism(g, h, *fwd));
    CHECK(is_isomorphism(h, g, inverse(*fwd)));
    const auto back = isomorphism(h, g);
    REQUIRE(back);
    CHECK(is_isomorphism(h, g, *back));
    CHECK(isomorphism(g, h) == fwd);
    const SerreGraph other = checks::random_connected_graph(rng, 14, 5);
    CHECK(isomorphism(g, other).has_value() == isomorphism(h, other).has_value());
  }
}

TEST_CASE("isomorphism handles regular graphs of moderate size") {
  // two 3-regular graphs on 40 vertices: a prism and a Moebius ladder
  auto ladder = [](int n, bool twisted) {
    SerreGraph g;
    for (int i = 0; i < 2 * n; ++i) g.add_vertex(VertexId("v" + std::to_string(i)));
    int e = 0;
    auto add = [&](int a, int b) { g.add_edge("e" + std::to_string(e++), VertexId("v" + std::to_string(a)), VertexId("v" + std::to_string(b))); };
    for (int i = 0; i < n; ++i) add(i, n + i);
    for (int i = 0; i + 1 < n; ++i) {
      add(i, i + 1);
      add(n + i, n + i + 1);
    }
    if (twisted) {
      add(n - 1, n);
      add(2 * n - 1, 0);
    } else {
      add(n - 1, 0);
      add(2 * n - 1, n);
    }
    return g;
  };
  const SerreGraph prism = ladder(20, false);
  const SerreGraph moebius = ladder(20, true);
  CHECK_FALSE(isomorphism(prism, moebius));
  const auto self = isomorphism(prism, prism);
  REQUIRE(self);
  CHECK(is_isomorphism(prism, prism, *self));
}

TEST_CASE("relabel") {
  const SerreGraph g = path(2);
  GraphIsomorphism m;
  m.vertices = {{VertexId("p0"), VertexId("x")}, {VertexId("p1"), VertexId("y")}};
  m.darts = {{DartId("k0"), DartId("e")}, {DartId("~k0"), DartId("~e")}};
  CHECK(relabel(g, m) == make_graph({"x", "y"}, {{"e", "x", "y"}}));
  m.vertices.erase(VertexId("p1"));
  CHECK_THROWS_AS(relabel(g, m), GraphError);
}
