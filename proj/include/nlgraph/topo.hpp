#pragma once

#include <cstdint>
#include <vector>

#include "nlgraph/serre_graph.hpp"

namespace nlgraph {

/// A graph with no smoothable degree-2 vertex, canonically relabeled:
/// vertices r0, r1, ... in the order of the surviving original identifiers,
/// edges e0, e1, ... sorted by endpoints and by the original chain each one
/// replaces. A circle becomes the single vertex r0 carrying loop e0.
struct ReducedForm {
  SerreGraph graph;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Suppresses degree-2 vertices whose two darts lie on distinct edges until
/// none remain. Throws GraphError on empty or disconnected input.
ReducedForm reduce(const SerreGraph& g);

/// `reduce` with a pseudo-random smoothing order drawn from `seed`.
ReducedForm reduce_with_order(const SerreGraph& g, std::uint64_t seed);

/// True iff no vertex is smoothable.
bool is_reduced(const SerreGraph& g);

/// Realization homeomorphism: isomorphic reduced forms.
bool homeomorphic(const SerreGraph& g1, const SerreGraph& g2);

/// Both cores empty, or both nonempty with homeomorphic realizations.
bool equivalent(const SerreGraph& g1, const SerreGraph& g2);

/// A maximal path whose interior vertices all have degree 2.
struct Chain {
  VertexId from;
  VertexId to;
  std::vector<DartId> darts;  // darts[0] leaves `from`
};

/// Branch vertices (degree != 2, or a lone loop) and the chains joining them.
/// A cycle has no natural branch vertex; its least vertex is used.
struct ChainDecomposition {
  std::vector<VertexId> branch_vertices;
  std::vector<Chain> chains;
};

/// Throws GraphError on empty or disconnected input.
ChainDecomposition decompose_chains(const SerreGraph& g);

}  // namespace nlgraph
