#pragma once

// Deterministic generators for property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "nlgraph/polynomial.hpp"
#include "nlgraph/serre_graph.hpp"
#include "nlgraph/valuations.hpp"

namespace nlgraph::checks {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// A random spanning tree on 1..max_vertices vertices plus up to `max_extra`
/// further edges, which may be loops or parallel edges.
SerreGraph random_connected_graph(Rng& rng, std::size_t max_vertices, std::size_t max_extra);

/// Like `random_connected_graph` with exactly `extra` additional non-tree edges.
SerreGraph random_graph_with_betti(Rng& rng, std::size_t vertices, std::size_t extra);

/// Every connected graph with at most `max_edges` edges (loops and parallel
/// edges allowed), one representative per isomorphism class.
std::vector<SerreGraph> small_connected_graphs(std::size_t max_edges);

/// Nonzero rational in [-bound, bound] with denominator at most `den`.
Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t den);

/// Up to `max_terms` terms of total degree at most `max_degree`; may be zero
/// when `allow_zero` is set.
Polynomial random_polynomial(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t max_terms,
                             bool allow_zero = true);

/// Nonnegative weights; each entry is zero with probability 1/5 when
/// `allow_zero` is set.
Weights random_weights(Rng& rng, std::size_t arity, bool allow_zero);

}  // namespace nlgraph::checks
