#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlgraph/graph_core.hpp"
#include "nlgraph/serre_graph.hpp"

namespace nlgraph {

/// Adds vertex `new_vertex` and edge `new_edge` with dart `new_edge` leaving
/// `at` and dart `~new_edge` leaving the new vertex.
struct Expansion {
  VertexId at;
  VertexId new_vertex;
  std::string new_edge;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Replaces the edge of `dart` (from a to b) by `first_edge` (a to new
/// vertex) and `second_edge` (new vertex to b).
struct Subdivision {
  DartId dart;
  VertexId new_vertex;
  std::string first_edge;
  std::string second_edge;

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

/// Renames every vertex and dart; the graph is replaced by its image.
struct Relabeling {
  GraphIsomorphism map;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

using Modification = std::variant<Expansion, Subdivision, Relabeling>;

/// Two modification sequences and an isomorphism between their end graphs.
struct EquivalenceCertificate {
  std::vector<Modification> seq1;
  std::vector<Modification> seq2;
  GraphIsomorphism final_iso;

  friend bool operator==(const EquivalenceCertificate&, const EquivalenceCertificate&) = default;
};

/// Throws ModificationError on dangling references or reused identifiers.
SerreGraph apply(const SerreGraph& g, const Modification& m);
SerreGraph apply_all(const SerreGraph& g, std::span<const Modification> steps);

/// Builds a certificate iff the graphs are equivalent. Both sides only grow:
/// chains of the reduced cores are subdivided to equal length, and the trees
/// hanging at matched core vertices are grafted onto each other.
std::optional<EquivalenceCertificate> certify(const SerreGraph& g1, const SerreGraph& g2);

/// Replays both sequences and checks the final map structurally. Returns
/// false for a well-formed certificate that does not witness an isomorphism;
/// throws CertificateError when a step or map entry does not resolve.
bool verify(const SerreGraph& g1, const SerreGraph& g2, const EquivalenceCertificate& cert);

struct ModifiedGraph {
  SerreGraph graph;
  std::vector<Modification> steps;
};

/// Applies `n` random valid modifications; identical output per seed.
ModifiedGraph random_modifications(const SerreGraph& g, std::size_t n, std::uint64_t seed);

/// Smallest "<prefix><k>" (k = 0, 1, ...) not used as a vertex of `g`.
VertexId fresh_vertex(const SerreGraph& g, std::string_view prefix);
/// Smallest "<prefix><k>" other than `skip` with neither dart of the
/// conventional pair in `g`.
std::string fresh_edge(const SerreGraph& g, std::string_view prefix, std::string_view skip = {});

}  // namespace nlgraph
