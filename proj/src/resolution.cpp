#include "nlgraph/resolution.hpp"

#include <set>

#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"
#include "nlgraph/modifications.hpp"
#include "nlgraph/valuations.hpp"

namespace nlgraph {

std::vector<std::string> config_violations(const DivisorConfig& cfg) {
  std::vector<std::string> out = validate(cfg.graph);
  if (!out.empty()) return out;
  if (!is_connected(cfg.graph)) out.push_back("dual graph is not connected");
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const DartId& d : cfg.graph.edge_representatives()) {
    VertexId a = cfg.graph.endpoint(d);
    VertexId b = cfg.graph.endpoint(cfg.graph.reverse(d));
    if (a == b) {
      out.push_back("loop at '" + a.value + "' (edge '" + d.value + "')");
      continue;
    }
    if (b < a) std::swap(a, b);
    if (!pairs.emplace(a, b).second) {
      out.push_back("multiple edges between '" + a.value + "' and '" + b.value + "'");
    }
  }
  for (const auto& [v, label] : cfg.graph.vertices()) {
    auto it = cfg.multiplicity.find(v);
    if (it == cfg.multiplicity.end()) {
      out.push_back("vertex '" + v.value + "' has no multiplicity");
    } else if (it->second < 1) {
      out.push_back("vertex '" + v.value + "' has multiplicity below 1");
    }
  }
  for (const auto& [v, b] : cfg.multiplicity) {
    if (!cfg.graph.has_vertex(v)) out.push_back("multiplicity given for unknown vertex '" + v.value + "'");
  }
  return out;
}

DivisorConfig make_config(SerreGraph graph, std::map<VertexId, Integer> multiplicity) {
  DivisorConfig cfg{std::move(graph), std::move(multiplicity)};
  if (auto problems = config_violations(cfg); !problems.empty()) {
    throw ConfigError("invalid divisor configuration: " + problems.front());
  }
  return cfg;
}

DivisorConfig initial_config() {
  SerreGraph g;
  g.add_vertex(VertexId("v0"));
  return DivisorConfig{std::move(g), {{VertexId("v0"), Integer(1)}}};
}

namespace {

const Integer& multiplicity_of(const DivisorConfig& cfg, const VertexId& v) {
  auto it = cfg.multiplicity.find(v);
  if (it == cfg.multiplicity.end()) throw ConfigError("unknown component '" + v.value + "'");
  return it->second;
}

}  // namespace

DivisorConfig blow_up_free(const DivisorConfig& cfg, const VertexId& v) {
  const Integer b = multiplicity_of(cfg, v);
  DivisorConfig out = cfg;
  const VertexId fresh = fresh_vertex(cfg.graph, "v");
  out.graph = nlgraph::apply(cfg.graph, Expansion{v, fresh, fresh_edge(cfg.graph, "b")});
  out.multiplicity.emplace(fresh, b);
  return out;
}

DartId edge_between(const DivisorConfig& cfg, const VertexId& u, const VertexId& v) {
  if (!cfg.graph.has_vertex(u)) throw ConfigError("unknown component '" + u.value + "'");
  if (!cfg.graph.has_vertex(v)) throw ConfigError("unknown component '" + v.value + "'");
  if (u == v) throw ConfigError("satellite points need two distinct components");
  for (const DartId& d : cfg.graph.darts_at(u)) {
    if (cfg.graph.endpoint(cfg.graph.reverse(d)) == v) return d;
  }
  throw ConfigError("components '" + u.value + "' and '" + v.value + "' do not meet");
}

DivisorConfig blow_up_satellite(const DivisorConfig& cfg, const VertexId& u, const VertexId& v) {
  const DartId d = edge_between(cfg, u, v);
  const Integer b = multiplicity_of(cfg, u) + multiplicity_of(cfg, v);
  DivisorConfig out = cfg;
  const VertexId fresh = fresh_vertex(cfg.graph, "v");
  const std::string first = fresh_edge(cfg.graph, "b");
  out.graph = nlgraph::apply(cfg.graph, Subdivision{d, fresh, first, fresh_edge(cfg.graph, "b", first)});
  out.multiplicity.emplace(fresh, b);
  return out;
}

std::pair<Rational, Rational> edge_skeleton_point(const DivisorConfig& cfg, const VertexId& u,
                                                  const VertexId& v, const Rational& t) {
  edge_between(cfg, u, v);
  return skeleton_weights(multiplicity_of(cfg, u), multiplicity_of(cfg, v), t);
}

Rational divisorial_weight(const DivisorConfig& cfg, const VertexId& v) {
  return Rational(1) / Rational(multiplicity_of(cfg, v));
}

DivisorConfig apply_blow_up(const DivisorConfig& cfg, const BlowUpStep& step) {
  if (const auto* f = std::get_if<FreeBlowUp>(&step)) return blow_up_free(cfg, f->at);
  const auto& s = std::get<SatelliteBlowUp>(step);
  return blow_up_satellite(cfg, s.u, s.v);
}

DivisorConfig apply_blow_ups(const DivisorConfig& cfg, std::span<const BlowUpStep> steps) {
  DivisorConfig cur = cfg;
  for (const auto& s : steps) cur = apply_blow_up(cur, s);
  return cur;
}

}  // namespace nlgraph
