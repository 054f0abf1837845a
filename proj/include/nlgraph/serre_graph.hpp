#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nlgraph/ident.hpp"

namespace nlgraph {

/// Per-dart data. Both entries are optional so that malformed graphs can be
/// represented and reported by `validate` instead of rejected on construction.
struct DartRecord {
  std::optional<DartId> reverse;
  std::optional<VertexId> endpoint;

  friend bool operator==(const DartRecord&, const DartRecord&) = default;
};

/// A finite graph in Serre's sense: darts with a reverse involution and an
/// endpoint map. Loops and parallel edges are allowed. Vertices carry an
/// optional free-text label.
///
/// The class is a plain value. Mutators keep the involution consistent;
/// `from_parts` does not and exists to feed `validate`.
class SerreGraph {
 public:
  SerreGraph() = default;

  static SerreGraph from_parts(std::map<VertexId, std::string> vertices,
                               std::map<DartId, DartRecord> darts);

  /// Throws GraphError if the id is taken.
  void add_vertex(const VertexId& v, std::string label = {});

  /// Adds darts `d` (leaving `from`) and `rd` (leaving `to`) as one edge.
  void add_edge(const DartId& d, const DartId& rd, const VertexId& from, const VertexId& to);
  /// Conventional naming: darts `name` and `~name`.
  void add_edge(std::string_view name, const VertexId& from, const VertexId& to);

  /// Removes `d` and its reverse.
  void remove_edge(const DartId& d);
  /// Removes an isolated vertex; throws if darts still attach to it.
  void remove_vertex(const VertexId& v);

  const std::map<VertexId, std::string>& vertices() const { return vertices_; }
  const std::map<DartId, DartRecord>& darts() const { return darts_; }

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_dart(const DartId& d) const { return darts_.contains(d); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t dart_count() const { return darts_.size(); }
  std::size_t edge_count() const { return darts_.size() / 2; }

  /// Throws GraphError on unknown or incomplete darts.
  const DartId& reverse(const DartId& d) const;
  const VertexId& endpoint(const DartId& d) const;
  const std::string& label(const VertexId& v) const;

  /// Darts with endpoint `v`, in identifier order.
  std::vector<DartId> darts_at(const VertexId& v) const;

  /// One representative dart per edge (the smaller of each pair).
  std::vector<DartId> edge_representatives() const;

  friend bool operator==(const SerreGraph&, const SerreGraph&) = default;

 private:
  std::map<VertexId, std::string> vertices_;
  std::map<DartId, DartRecord> darts_;
};

/// Builds a graph from conventional edge triples; vertices are created on
/// first mention. Intended for tests and small literal graphs.
SerreGraph make_graph(std::vector<std::string> vertices,
                      std::vector<std::tuple<std::string, std::string, std::string>> edges);

}  // namespace nlgraph
