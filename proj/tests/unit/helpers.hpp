#pragma once

#include <string>

#include "nlgraph/io.hpp"
#include "nlgraph/serre_graph.hpp"

namespace testing {

inline nlgraph::SerreGraph fixture(const std::string& rel) {
  return nlgraph::load_graph(std::string(NLGRAPH_FIXTURE_DIR) + "/" + rel).graph;
}

inline nlgraph::SerreGraph cycle(int n) {
  nlgraph::SerreGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(nlgraph::VertexId("c" + std::to_string(i)));
  for (int i = 0; i < n; ++i) {
    g.add_edge("k" + std::to_string(i), nlgraph::VertexId("c" + std::to_string(i)),
               nlgraph::VertexId("c" + std::to_string((i + 1) % n)));
  }
  return g;
}

inline nlgraph::SerreGraph path(int n) {
  nlgraph::SerreGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(nlgraph::VertexId("p" + std::to_string(i)));
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge("k" + std::to_string(i), nlgraph::VertexId("p" + std::to_string(i)),
               nlgraph::VertexId("p" + std::to_string(i + 1)));
  }
  return g;
}

inline nlgraph::SerreGraph theta() { return nlgraph::make_graph({"a", "b"}, {{"1", "a", "b"}, {"2", "a", "b"}, {"3", "a", "b"}}); }

inline nlgraph::SerreGraph triangle_with_pendant() {
  return nlgraph::make_graph({"a", "b", "c", "d"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "c", "a"}, {"4", "a", "d"}});
}

}  // namespace testing
