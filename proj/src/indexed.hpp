#pragma once

// Dense integer view of a well-formed SerreGraph used by the algorithms.

#include <string>
#include <vector>

#include "nlgraph/serre_graph.hpp"

namespace nlgraph::detail {

struct IndexedGraph {
  std::vector<VertexId> vertex_ids;  // identifier order
  std::vector<DartId> dart_ids;      // identifier order
  std::vector<int> reverse;          // dart -> dart
  std::vector<int> endpoint;         // dart -> vertex
  std::vector<std::vector<int>> incident;  // vertex -> darts, ascending

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int dart_count() const { return static_cast<int>(dart_ids.size()); }
  int far_end(int d) const { return endpoint[reverse[d]]; }
  bool is_loop(int d) const { return endpoint[d] == far_end(d); }

  int vertex_index(const VertexId& v) const;  // -1 if absent
  int dart_index(const DartId& d) const;      // -1 if absent
};

/// Violations of the dart axioms only (emptiness is not one).
std::vector<std::string> dart_violations(const SerreGraph& g);

/// Throws GraphError when `g` has dart violations.
IndexedGraph index_graph(const SerreGraph& g);

/// Component label per vertex, numbered in order of first vertex.
std::vector<int> components(const IndexedGraph& ig, int* count = nullptr);

/// Throws GraphError unless `g` is valid, nonempty and connected.
void require_connected(const SerreGraph& g, const char* operation);

}  // namespace nlgraph::detail
