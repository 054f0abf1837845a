#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nlgraph/polynomial.hpp"
#include "nlgraph/serre_graph.hpp"

namespace nlgraph {

/// Dual graph of a good resolution together with the multiplicity b_v of
/// each exceptional component in the pullback of the maximal ideal.
struct DivisorConfig {
  SerreGraph graph;
  std::map<VertexId, Integer> multiplicity;

  friend bool operator==(const DivisorConfig&, const DivisorConfig&) = default;
};

/// Connected, loop-free, free of parallel edges, one multiplicity >= 1 per vertex.
std::vector<std::string> config_violations(const DivisorConfig& cfg);

/// Throws ConfigError listing the first violation.
DivisorConfig make_config(SerreGraph graph, std::map<VertexId, Integer> multiplicity);

/// One exceptional curve v0 of multiplicity 1: the blow-up of a smooth point.
DivisorConfig initial_config();

/// Blow-up of a point lying on the component `v` only. The dual graph is
/// expanded at `v`; the new component has multiplicity b_v.
DivisorConfig blow_up_free(const DivisorConfig& cfg, const VertexId& v);

/// Blow-up of the intersection point of components `u` and `v`. Their edge is
/// subdivided; the new component has multiplicity b_u + b_v.
DivisorConfig blow_up_satellite(const DivisorConfig& cfg, const VertexId& u, const VertexId& v);

/// The dart leaving `u` towards `v`; throws ConfigError if they are not adjacent.
DartId edge_between(const DivisorConfig& cfg, const VertexId& u, const VertexId& v);

/// Monomial weights (t/b_u, (1-t)/b_v) of the skeleton point at parameter t
/// on the edge u-v. Throws ValuationError when t is outside [0, 1].
std::pair<Rational, Rational> edge_skeleton_point(const DivisorConfig& cfg, const VertexId& u,
                                                  const VertexId& v, const Rational& t);

/// 1/b_v, the weight of the normalized divisorial valuation of `v`.
Rational divisorial_weight(const DivisorConfig& cfg, const VertexId& v);

struct FreeBlowUp {
  VertexId at;
  friend bool operator==(const FreeBlowUp&, const FreeBlowUp&) = default;
};
struct SatelliteBlowUp {
  VertexId u;
  VertexId v;
  friend bool operator==(const SatelliteBlowUp&, const SatelliteBlowUp&) = default;
};
using BlowUpStep = std::variant<FreeBlowUp, SatelliteBlowUp>;

DivisorConfig apply_blow_up(const DivisorConfig& cfg, const BlowUpStep& step);
DivisorConfig apply_blow_ups(const DivisorConfig& cfg, std::span<const BlowUpStep> steps);

}  // namespace nlgraph
