#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlgraph/serre_graph.hpp"

namespace nlgraph {

/// Lists every broken structural invariant; empty iff the graph is well formed.
std::vector<std::string> validate(const SerreGraph& g);

/// Number of darts ending at `v`; a loop counts twice.
std::size_t degree(const SerreGraph& g, const VertexId& v);

bool is_connected(const SerreGraph& g);
std::size_t component_count(const SerreGraph& g);

/// First Betti number: edges - vertices + components.
std::size_t betti(const SerreGraph& g);

/// A path is a sequence of darts; dart i+1 leaves the endpoint of reverse(dart i).
using DartPath = std::vector<DartId>;

/// All reduced paths from `u` to `v` of length at most `max_len`, in
/// lexicographic dart order. Exponential; meant as a brute-force oracle.
std::vector<DartPath> enumerate_reduced_paths(const SerreGraph& g, const VertexId& u,
                                              const VertexId& v, std::size_t max_len);

bool is_tree(const SerreGraph& g);

/// Repeatedly deletes degree-one vertices. Returns nullopt (the empty core)
/// for trees. Throws GraphError on disconnected or empty input.
std::optional<SerreGraph> core(const SerreGraph& g);

/// Same as `core`, but picks the next leaf to delete pseudo-randomly from
/// `seed`. Exists to exercise order independence.
std::optional<SerreGraph> core_with_order(const SerreGraph& g, std::uint64_t seed);

/// Vertex and dart bijections between two graphs.
struct GraphIsomorphism {
  std::map<VertexId, VertexId> vertices;
  std::map<DartId, DartId> darts;

  friend bool operator==(const GraphIsomorphism&, const GraphIsomorphism&) = default;
};

/// Exact backtracking search. The returned witness is the least one when
/// vertex images are listed in source-identifier order, ties broken by the
/// dart images in the same way.
std::optional<GraphIsomorphism> isomorphism(const SerreGraph& g1, const SerreGraph& g2);

/// Checks that `m` is a bijection commuting with reverse and endpoint.
bool is_isomorphism(const SerreGraph& g1, const SerreGraph& g2, const GraphIsomorphism& m);

GraphIsomorphism inverse(const GraphIsomorphism& m);
GraphIsomorphism identity_isomorphism(const SerreGraph& g);

/// The image of `g` under a relabeling; throws GraphError unless `m` is total
/// and injective on the vertices and darts of `g`.
SerreGraph relabel(const SerreGraph& g, const GraphIsomorphism& m);

}  // namespace nlgraph
