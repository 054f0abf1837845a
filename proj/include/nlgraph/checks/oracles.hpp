#pragma once

// Brute-force reference implementations the library is tested against.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nlgraph/polynomial.hpp"
#include "nlgraph/resolution.hpp"
#include "nlgraph/serre_graph.hpp"

namespace nlgraph::checks {

/// Tree test straight from the definition: between any two vertices there is
/// exactly one reduced path (searched up to the edge count).
bool tree_by_reduced_paths(const SerreGraph& g);

/// Tries every vertex bijection and compares edge multiplicities between all
/// vertex pairs. Only for graphs with a handful of vertices.
bool brute_force_isomorphic(const SerreGraph& g1, const SerreGraph& g2);

/// The graph with edge `reps[i]` replaced by a path through counts[i] new vertices.
SerreGraph subdivide_edges(const SerreGraph& g, const std::vector<DartId>& reps,
                           const std::vector<std::size_t>& counts);

/// Assigns global ids to isomorphism classes of subdivisions. Two graphs are
/// homeomorphic for the oracle when some subdivision of each, with at most
/// `max_extra` new vertices per side, lands in a shared class.
class SubdivisionOracle {
 public:
  explicit SubdivisionOracle(std::size_t max_extra) : max_extra_(max_extra) {}

  /// Class ids of every subdivision of `g` with at most max_extra new vertices.
  std::set<std::size_t> reachable_classes(const SerreGraph& g);

  bool common_subdivision(const SerreGraph& g1, const SerreGraph& g2);

  std::size_t class_count() const { return next_id_; }

 private:
  std::size_t class_of(SerreGraph g);

  std::size_t max_extra_;
  std::size_t next_id_ = 0;
  std::map<std::vector<std::size_t>, std::vector<std::pair<SerreGraph, std::size_t>>> buckets_;
};

/// Follows a sequence of point blow-ups over the origin of the plane in
/// explicit coordinate charts, tracking the pullbacks X and Y of the plane
/// coordinates. The multiplicity of each new exceptional curve is read off as
/// the order of (X, Y) at the blown-up point under the weights (1, 1) in
/// local coordinates there. Component names follow the library's blow-up
/// functions so the two can be compared step by step.
class BlowUpChartOracle {
 public:
  BlowUpChartOracle();

  /// Mirrors blow_up_free(cfg, v) whose new component is `fresh`; returns its multiplicity.
  Integer free(const VertexId& v, const VertexId& fresh);
  /// Mirrors blow_up_satellite(cfg, u, v) whose new component is `fresh`.
  Integer satellite(const VertexId& u, const VertexId& v, const VertexId& fresh);

  /// Multiplicities of all components seen so far, recomputed from the charts.
  std::map<VertexId, Integer> multiplicities() const;

  /// Empty unless an internal consistency check failed.
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  struct Chart {
    Polynomial x, y;  // pullbacks of the plane coordinates, in variables w1, w2
  };
  struct Component {
    Chart free_chart;  // the component is {w1 = 0}
    int used_points = 0;
    Integer multiplicity;
  };
  // Chart at an intersection point: first component {w1 = 0}, second {w2 = 0}.
  using EdgeKey = std::pair<VertexId, VertexId>;

  Integer blow_up_point(const Chart& local, const VertexId& fresh);
  void check_order_along(const Chart& c, const Integer& expected, const VertexId& who);

  std::map<VertexId, Component> components_;
  std::map<EdgeKey, Chart> edges_;
  std::vector<std::string> problems_;
};

}  // namespace nlgraph::checks
