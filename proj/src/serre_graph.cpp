#include "nlgraph/serre_graph.hpp"

#include "nlgraph/error.hpp"

namespace nlgraph {

SerreGraph SerreGraph::from_parts(std::map<VertexId, std::string> vertices,
                                  std::map<DartId, DartRecord> darts) {
  SerreGraph g;
  g.vertices_ = std::move(vertices);
  g.darts_ = std::move(darts);
  return g;
}

void SerreGraph::add_vertex(const VertexId& v, std::string label) {
  if (!vertices_.emplace(v, std::move(label)).second) {
    throw GraphError("duplicate vertex '" + v.value + "'");
  }
}

void SerreGraph::add_edge(const DartId& d, const DartId& rd, const VertexId& from, const VertexId& to) {
  if (d == rd) throw GraphError("dart '" + d.value + "' cannot be its own reverse");
  if (darts_.contains(d)) throw GraphError("duplicate dart '" + d.value + "'");
  if (darts_.contains(rd)) throw GraphError("duplicate dart '" + rd.value + "'");
  if (!vertices_.contains(from)) throw GraphError("unknown vertex '" + from.value + "'");
  if (!vertices_.contains(to)) throw GraphError("unknown vertex '" + to.value + "'");
  darts_.emplace(d, DartRecord{rd, from});
  darts_.emplace(rd, DartRecord{d, to});
}

void SerreGraph::add_edge(std::string_view name, const VertexId& from, const VertexId& to) {
  add_edge(forward_dart(name), backward_dart(name), from, to);
}

void SerreGraph::remove_edge(const DartId& d) {
  const DartId rd = reverse(d);
  darts_.erase(d);
  darts_.erase(rd);
}

void SerreGraph::remove_vertex(const VertexId& v) {
  if (!vertices_.contains(v)) throw GraphError("unknown vertex '" + v.value + "'");
  for (const auto& [id, rec] : darts_) {
    if (rec.endpoint == v) throw GraphError("vertex '" + v.value + "' still has incident darts");
  }
  vertices_.erase(v);
}

const DartId& SerreGraph::reverse(const DartId& d) const {
  auto it = darts_.find(d);
  if (it == darts_.end()) throw GraphError("unknown dart '" + d.value + "'");
  if (!it->second.reverse) throw GraphError("dart '" + d.value + "' has no reverse");
  return *it->second.reverse;
}

const VertexId& SerreGraph::endpoint(const DartId& d) const {
  auto it = darts_.find(d);
  if (it == darts_.end()) throw GraphError("unknown dart '" + d.value + "'");
  if (!it->second.endpoint) throw GraphError("dart '" + d.value + "' has no endpoint");
  return *it->second.endpoint;
}

const std::string& SerreGraph::label(const VertexId& v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw GraphError("unknown vertex '" + v.value + "'");
  return it->second;
}

std::vector<DartId> SerreGraph::darts_at(const VertexId& v) const {
  if (!vertices_.contains(v)) throw GraphError("unknown vertex '" + v.value + "'");
  std::vector<DartId> out;
  for (const auto& [id, rec] : darts_) {
    if (rec.endpoint == v) out.push_back(id);
  }
  return out;
}

std::vector<DartId> SerreGraph::edge_representatives() const {
  std::vector<DartId> out;
  for (const auto& [id, rec] : darts_) {
    if (rec.reverse && id < *rec.reverse) out.push_back(id);
  }
  return out;
}

SerreGraph make_graph(std::vector<std::string> vertices,
                      std::vector<std::tuple<std::string, std::string, std::string>> edges) {
  SerreGraph g;
  auto ensure = [&g](const std::string& v) {
    if (!g.has_vertex(VertexId(v))) g.add_vertex(VertexId(v));
  };
  for (const auto& v : vertices) ensure(v);
  for (const auto& [name, a, b] : edges) {
    ensure(a);
    ensure(b);
    g.add_edge(name, VertexId(a), VertexId(b));
  }
  return g;
}

}  // namespace nlgraph
