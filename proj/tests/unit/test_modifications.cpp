#include <doctest.h>

#include "helpers.hpp"
#include "nlgraph/checks/generators.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/topo.hpp"

using namespace nlgraph;
using testing::cycle;
using testing::path;

TEST_CASE("apply") {
  SUBCASE("expansion at a triangle vertex") {
    const SerreGraph g = nlgraph::apply(cycle(3), Expansion{VertexId("c0"), VertexId("n"), "t"});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(betti(g) == 1);
    CHECK(g.endpoint(DartId("t")) == VertexId("c0"));
    CHECK(g.endpoint(DartId("~t")) == VertexId("n"));
  }
  SUBCASE("subdivision of a triangle edge gives a square") {
    const SerreGraph g = nlgraph::apply(cycle(3), Subdivision{DartId("k0"), VertexId("m"), "s", "u"});
    CHECK(isomorphism(g, cycle(4)));
    CHECK_FALSE(g.has_dart(DartId("k0")));
    CHECK(g.endpoint(DartId("s")) == VertexId("c0"));
    CHECK(g.endpoint(DartId("~s")) == VertexId("m"));
    CHECK(g.endpoint(DartId("u")) == VertexId("m"));
    CHECK(g.endpoint(DartId("~u")) == VertexId("c1"));
  }
  SUBCASE("subdivision through the reverse dart") {
    const SerreGraph g = nlgraph::apply(path(2), Subdivision{DartId("~k0"), VertexId("m"), "s", "u"});
    CHECK(g.endpoint(DartId("s")) == VertexId("p1"));
    CHECK(g.endpoint(DartId("~u")) == VertexId("p0"));
  }
  SUBCASE("subdivision of a loop") {
    const SerreGraph g = nlgraph::apply(make_graph({"a"}, {{"l", "a", "a"}}), Subdivision{DartId("l"), VertexId("m"), "s", "u"});
    CHECK(isomorphism(g, make_graph({"x", "y"}, {{"1", "x", "y"}, {"2", "x", "y"}})));
  }
  SUBCASE("relabeling") {
    GraphIsomorphism m;
    m.vertices = {{VertexId("p0"), VertexId("b")}, {VertexId("p1"), VertexId("a")}};
    m.darts = {{DartId("k0"), DartId("~z")}, {DartId("~k0"), DartId("z")}};
    const SerreGraph g = nlgraph::apply(path(2), Relabeling{m});
    CHECK(isomorphism(g, path(2)));
    CHECK(g.endpoint(DartId("~z")) == VertexId("b"));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Expansion{VertexId("zz"), VertexId("n"), "t"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Expansion{VertexId("c0"), VertexId("c1"), "t"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Expansion{VertexId("c0"), VertexId("n"), "k1"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Expansion{VertexId("c0"), VertexId("n"), "~t"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Subdivision{DartId("nope"), VertexId("n"), "a", "b"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Subdivision{DartId("k0"), VertexId("n"), "a", "a"}), ModificationError);
    CHECK_THROWS_AS(nlgraph::apply(cycle(3), Relabeling{}), ModificationError);
  }
}

TEST_CASE("modifications preserve betti and equivalence") {
  checks::Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const SerreGraph g = checks::random_connected_graph(rng, 10, 4);
    const auto r = random_modifications(g, 8, rng());
    CHECK(r.steps.size() == 8);
    SerreGraph cur = g;
    for (const auto& m : r.steps) {
      const SerreGraph next = nlgraph::apply(cur, m);
      CHECK(betti(next) == betti(cur));
      if (std::holds_alternative<Relabeling>(m)) {
        CHECK(next.vertex_count() == cur.vertex_count());
      } else {
        CHECK(next.vertex_count() == cur.vertex_count() + 1);
        CHECK(next.edge_count() == cur.edge_count() + 1);
      }
      cur = next;
    }
    CHECK(cur == r.graph);
    CHECK(equivalent(g, r.graph));
  }
}

TEST_CASE("random_modifications is deterministic") {
  const SerreGraph g = testing::fixture("trio/triangles_sharing_side.nlg");
  const auto a = random_modifications(g, 12, 99);
  const auto b = random_modifications(g, 12, 99);
  CHECK(a.graph == b.graph);
  CHECK(a.steps == b.steps);
  const auto none = random_modifications(g, 0, 5);
  CHECK(none.graph == g);
  CHECK(none.steps.empty());
  CHECK_THROWS_AS(random_modifications(make_graph({"a", "b"}, {}), 1, 0), GraphError);
}

TEST_CASE("certify examples") {
  SUBCASE("a graph with itself") {
    const SerreGraph g = testing::fixture("trio/segment_with_triangles.nlg");
    const auto cert = certify(g, g);
    REQUIRE(cert);
    CHECK(cert->seq1.empty());
    CHECK(cert->seq2.empty());
    CHECK(cert->final_iso == identity_isomorphism(g));
  }
  SUBCASE("triangle with pendant vs square") {
    const SerreGraph g1 = testing::triangle_with_pendant();
    const SerreGraph g2 = cycle(4);
    const auto cert = certify(g1, g2);
    REQUIRE(cert);
    REQUIRE(cert->seq1.size() == 1);
    REQUIRE(cert->seq2.size() == 1);
    CHECK(std::holds_alternative<Subdivision>(cert->seq1[0]));
    CHECK(std::holds_alternative<Expansion>(cert->seq2[0]));
    CHECK(verify(g1, g2, *cert));
  }
  SUBCASE("triangle vs path") { CHECK_FALSE(certify(cycle(3), path(3))); }
  SUBCASE("two trees") {
    const SerreGraph g1 = testing::fixture("trees/e6.nlg");
    const SerreGraph g2 = testing::fixture("trees/d4.nlg");
    const auto cert = certify(g1, g2);
    REQUIRE(cert);
    CHECK(verify(g1, g2, *cert));
  }
}

TEST_CASE("verify") {
  const SerreGraph g1 = testing::triangle_with_pendant();
  const SerreGraph g2 = cycle(4);
  const EquivalenceCertificate cert = *certify(g1, g2);
  SUBCASE("accepts the synthesized certificate") { CHECK(verify(g1, g2, cert)); }
  SUBCASE("rejects a swapped final map entry") {
    EquivalenceCertificate bad = cert;
    auto it = bad.final_iso.vertices.begin();
    auto jt = std::next(it);
    std::swap(it->second, jt->second);
    CHECK_FALSE(verify(g1, g2, bad));
  }
  SUBCASE("errors on a step referencing a missing edge") {
    EquivalenceCertificate bad = cert;
    bad.seq1.push_back(Subdivision{DartId("missing"), VertexId("q"), "q1", "q2"});
    CHECK_THROWS_AS(verify(g1, g2, bad), CertificateError);
  }
  SUBCASE("errors on unknown identifiers in the final map") {
    EquivalenceCertificate bad = cert;
    bad.final_iso.vertices.emplace(VertexId("ghost"), VertexId("u1"));
    CHECK_THROWS_AS(verify(g1, g2, bad), CertificateError);
  }
  SUBCASE("rejects an incomplete final map") {
    EquivalenceCertificate bad = cert;
    bad.final_iso.darts.erase(bad.final_iso.darts.begin());
    CHECK_FALSE(verify(g1, g2, bad));
  }
}

TEST_CASE("certify succeeds exactly on equivalent pairs") {
  checks::Rng rng(41);
  std::size_t yes = 0, no = 0;
  for (int k = 0; k < 200; ++k) {
    const SerreGraph a = checks::random_connected_graph(rng, 8, 3);
    const SerreGraph b = k % 2 ? random_modifications(a, static_cast<std::size_t>(checks::uniform(rng, 0, 8)), rng()).graph
                               : checks::random_connected_graph(rng, 8, 3);
    const auto cert = certify(a, b);
    CHECK(cert.has_value() == equivalent(a, b));
    if (cert) {
      ++yes;
      CHECK(verify(a, b, *cert));
    } else {
      ++no;
    }
  }
  CHECK(yes > 100);
  CHECK(no > 20);
}

TEST_CASE("certificates from a common ancestor") {
  checks::Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const SerreGraph base = checks::random_connected_graph(rng, 10, 4);
    const auto a = random_modifications(base, static_cast<std::size_t>(checks::uniform(rng, 0, 12)), rng());
    const auto b = random_modifications(base, static_cast<std::size_t>(checks::uniform(rng, 0, 12)), rng());
    const auto cert = certify(a.graph, b.graph);
    REQUIRE(cert);
    CHECK(verify(a.graph, b.graph, *cert));
    CHECK(certify(a.graph, b.graph) == cert);
  }
}

TEST_CASE("fresh names") {
  const SerreGraph g = make_graph({"n0", "n1"}, {{"t0", "n0", "n1"}});
  CHECK(fresh_vertex(g, "n") == VertexId("n2"));
  CHECK(fresh_edge(g, "t") == "t1");
  CHECK(fresh_edge(g, "t", "t1") == "t2");
}
