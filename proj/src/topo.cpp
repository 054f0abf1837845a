#include "nlgraph/topo.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>

#include "indexed.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/graph_core.hpp"

namespace nlgraph {

namespace {

using detail::IndexedGraph;

// Working copy for smoothing. Every current dart remembers the chain of
// original darts it stands for, so the final naming does not depend on the
// order in which vertices were suppressed.
class Smoother {
 public:
  explicit Smoother(const IndexedGraph& ig) : ig_(ig) {
    alive_v_.assign(ig.vertex_count(), true);
    incident_ = ig.incident;
    for (int d = 0; d < ig.dart_count(); ++d) {
      end_.push_back(ig.endpoint[d]);
      rev_.push_back(ig.reverse[d]);
      chain_.push_back({d});
    }
  }

  bool smoothable(int v) const {
    return alive_v_[v] && incident_[v].size() == 2 && rev_[incident_[v][0]] != incident_[v][1];
  }

  void run(std::mt19937_64* rng) {
    for (;;) {
      std::vector<int> candidates;
      for (int v = 0; v < ig_.vertex_count(); ++v) {
        if (smoothable(v)) candidates.push_back(v);
      }
      if (candidates.empty()) return;
      std::size_t pick = rng ? static_cast<std::size_t>((*rng)() % candidates.size()) : 0;
      smooth(candidates[pick]);
    }
  }

  SerreGraph canonical_graph() const {
    std::vector<int> rename(ig_.vertex_count(), -1);
    SerreGraph out;
    int next = 0;
    for (int v = 0; v < ig_.vertex_count(); ++v) {
      if (!alive_v_[v]) continue;
      rename[v] = next;
      out.add_vertex(VertexId("r" + std::to_string(next++)));
    }

    using Key = std::tuple<int, int, std::vector<int>>;
    std::vector<Key> edges;
    for (int v = 0; v < ig_.vertex_count(); ++v) {
      for (int d : incident_[v]) {
        const int rd = rev_[d];
        if (d > rd) continue;
        int a = d;
        const int from = rename[end_[d]], to = rename[end_[rd]];
        if (from > to || (from == to && chain_[rd] < chain_[d])) a = rd;
        edges.emplace_back(rename[end_[a]], rename[end_[rev_[a]]], chain_[a]);
      }
    }
    std::sort(edges.begin(), edges.end());
    int k = 0;
    for (const auto& [from, to, chain] : edges) {
      out.add_edge("e" + std::to_string(k++), VertexId("r" + std::to_string(from)),
                   VertexId("r" + std::to_string(to)));
    }
    return out;
  }

 private:
  void smooth(int v) {
    const int d1 = incident_[v][0], d2 = incident_[v][1];
    const int r1 = rev_[d1], r2 = rev_[d2];
    const int far1 = end_[r1], far2 = end_[r2];
    detach(far1, r1);
    detach(far2, r2);
    incident_[v].clear();
    alive_v_[v] = false;

    const int fwd = static_cast<int>(end_.size());
    const int bwd = fwd + 1;
    std::vector<int> fwd_chain = chain_[r1];
    fwd_chain.insert(fwd_chain.end(), chain_[d2].begin(), chain_[d2].end());
    std::vector<int> bwd_chain = chain_[r2];
    bwd_chain.insert(bwd_chain.end(), chain_[d1].begin(), chain_[d1].end());
    end_.push_back(far1);
    end_.push_back(far2);
    rev_.push_back(bwd);
    rev_.push_back(fwd);
    chain_.push_back(std::move(fwd_chain));
    chain_.push_back(std::move(bwd_chain));
    incident_[far1].push_back(fwd);
    incident_[far2].push_back(bwd);
  }

  void detach(int v, int d) {
    auto& inc = incident_[v];
    inc.erase(std::find(inc.begin(), inc.end(), d));
  }

  const IndexedGraph& ig_;
  std::vector<bool> alive_v_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> end_, rev_;
  std::vector<std::vector<int>> chain_;
};

ReducedForm reduce_impl(const SerreGraph& g, std::mt19937_64* rng) {
  detail::require_connected(g, "reduce");
  const IndexedGraph ig = detail::index_graph(g);
  Smoother s(ig);
  s.run(rng);
  return ReducedForm{s.canonical_graph()};
}

}  // namespace

ReducedForm reduce(const SerreGraph& g) { return reduce_impl(g, nullptr); }

ReducedForm reduce_with_order(const SerreGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce_impl(g, &rng);
}

bool is_reduced(const SerreGraph& g) {
  const IndexedGraph ig = detail::index_graph(g);
  const Smoother s(ig);
  for (int v = 0; v < ig.vertex_count(); ++v) {
    if (s.smoothable(v)) return false;
  }
  return true;
}

bool homeomorphic(const SerreGraph& g1, const SerreGraph& g2) {
  const ReducedForm r1 = reduce(g1);
  const ReducedForm r2 = reduce(g2);
  return isomorphism(r1.graph, r2.graph).has_value();
}

bool equivalent(const SerreGraph& g1, const SerreGraph& g2) {
  const auto c1 = core(g1);
  const auto c2 = core(g2);
  if (!c1 || !c2) return !c1 && !c2;
  return homeomorphic(*c1, *c2);
}

ChainDecomposition decompose_chains(const SerreGraph& g) {
  detail::require_connected(g, "decompose_chains");
  const IndexedGraph ig = detail::index_graph(g);
  const Smoother probe(ig);

  std::vector<bool> branch(ig.vertex_count(), false);
  bool any = false;
  for (int v = 0; v < ig.vertex_count(); ++v) {
    branch[v] = !probe.smoothable(v);
    any = any || branch[v];
  }
  if (!any) branch[0] = true;

  ChainDecomposition out;
  for (int v = 0; v < ig.vertex_count(); ++v) {
    if (branch[v]) out.branch_vertices.push_back(ig.vertex_ids[v]);
  }
  std::vector<bool> seen(ig.dart_count(), false);
  for (int v = 0; v < ig.vertex_count(); ++v) {
    if (!branch[v]) continue;
    for (int d : ig.incident[v]) {
      if (seen[d]) continue;
      Chain chain;
      chain.from = ig.vertex_ids[v];
      int cur = d;
      for (;;) {
        chain.darts.push_back(ig.dart_ids[cur]);
        seen[cur] = seen[ig.reverse[cur]] = true;
        const int w = ig.far_end(cur);
        if (branch[w]) {
          chain.to = ig.vertex_ids[w];
          break;
        }
        const auto& inc = ig.incident[w];
        cur = inc[0] == ig.reverse[cur] ? inc[1] : inc[0];
      }
      out.chains.push_back(std::move(chain));
    }
  }
  return out;
}

}  // namespace nlgraph
