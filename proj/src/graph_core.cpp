#include "nlgraph/graph_core.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "indexed.hpp"
#include "nlgraph/error.hpp"

namespace nlgraph {

namespace detail {

std::vector<std::string> dart_violations(const SerreGraph& g) {
  std::vector<std::string> out;
  for (const auto& [d, rec] : g.darts()) {
    const std::string name = "dart '" + d.value + "'";
    if (!rec.reverse) {
      out.push_back(name + ": missing reverse");
    } else if (*rec.reverse == d) {
      out.push_back(name + ": is its own reverse");
    } else {
      auto it = g.darts().find(*rec.reverse);
      if (it == g.darts().end()) {
        out.push_back(name + ": reverse '" + rec.reverse->value + "' is not a dart");
      } else if (it->second.reverse != d) {
        out.push_back(name + ": reverse of reverse is not the dart itself");
      }
    }
    if (!rec.endpoint) {
      out.push_back(name + ": missing endpoint");
    } else if (!g.has_vertex(*rec.endpoint)) {
      out.push_back(name + ": endpoint '" + rec.endpoint->value + "' is not a vertex");
    }
  }
  return out;
}

int IndexedGraph::vertex_index(const VertexId& v) const {
  auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), v);
  return (it != vertex_ids.end() && *it == v) ? static_cast<int>(it - vertex_ids.begin()) : -1;
}

int IndexedGraph::dart_index(const DartId& d) const {
  auto it = std::lower_bound(dart_ids.begin(), dart_ids.end(), d);
  return (it != dart_ids.end() && *it == d) ? static_cast<int>(it - dart_ids.begin()) : -1;
}

IndexedGraph index_graph(const SerreGraph& g) {
  if (auto problems = dart_violations(g); !problems.empty()) {
    throw GraphError("invalid graph: " + problems.front());
  }
  IndexedGraph ig;
  for (const auto& [v, label] : g.vertices()) ig.vertex_ids.push_back(v);
  for (const auto& [d, rec] : g.darts()) ig.dart_ids.push_back(d);
  ig.reverse.resize(ig.dart_ids.size());
  ig.endpoint.resize(ig.dart_ids.size());
  ig.incident.resize(ig.vertex_ids.size());
  int i = 0;
  for (const auto& [d, rec] : g.darts()) {
    ig.reverse[i] = ig.dart_index(*rec.reverse);
    ig.endpoint[i] = ig.vertex_index(*rec.endpoint);
    ig.incident[ig.endpoint[i]].push_back(i);
    ++i;
  }
  return ig;
}

std::vector<int> components(const IndexedGraph& ig, int* count) {
  std::vector<int> comp(ig.vertex_count(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < ig.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : ig.incident[v]) {
        int w = ig.far_end(d);
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

void require_connected(const SerreGraph& g, const char* operation) {
  if (g.vertex_count() == 0) throw GraphError(std::string(operation) + ": empty graph");
  if (!is_connected(g)) throw GraphError(std::string(operation) + ": graph is not connected");
}

}  // namespace detail

using detail::IndexedGraph;
using detail::index_graph;

std::vector<std::string> validate(const SerreGraph& g) {
  std::vector<std::string> out;
  if (g.vertex_count() == 0) out.push_back("graph has no vertices");
  auto darts = detail::dart_violations(g);
  out.insert(out.end(), darts.begin(), darts.end());
  return out;
}

std::size_t degree(const SerreGraph& g, const VertexId& v) { return g.darts_at(v).size(); }

std::size_t component_count(const SerreGraph& g) {
  int count = 0;
  detail::components(index_graph(g), &count);
  return static_cast<std::size_t>(count);
}

bool is_connected(const SerreGraph& g) { return component_count(g) <= 1; }

std::size_t betti(const SerreGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

std::vector<DartPath> enumerate_reduced_paths(const SerreGraph& g, const VertexId& u,
                                              const VertexId& v, std::size_t max_len) {
  const IndexedGraph ig = index_graph(g);
  const int src = ig.vertex_index(u);
  const int dst = ig.vertex_index(v);
  if (src < 0) throw GraphError("unknown vertex '" + u.value + "'");
  if (dst < 0) throw GraphError("unknown vertex '" + v.value + "'");

  std::vector<DartPath> out;
  std::vector<int> path;
  auto walk = [&](auto&& self, int at) -> void {
    if (at == dst) {
      DartPath p;
      for (int d : path) p.push_back(ig.dart_ids[d]);
      out.push_back(std::move(p));
    }
    if (path.size() == max_len) return;
    for (int d : ig.incident[at]) {
      if (!path.empty() && d == ig.reverse[path.back()]) continue;
      path.push_back(d);
      self(self, ig.far_end(d));
      path.pop_back();
    }
  };
  walk(walk, src);
  return out;
}

bool is_tree(const SerreGraph& g) {
  return g.vertex_count() > 0 && is_connected(g) && betti(g) == 0;
}

namespace {

std::optional<SerreGraph> prune_leaves(const SerreGraph& g, std::mt19937_64* rng) {
  detail::require_connected(g, "core");
  if (is_tree(g)) return std::nullopt;
  const IndexedGraph ig = index_graph(g);
  std::vector<int> deg(ig.vertex_count());
  for (int v = 0; v < ig.vertex_count(); ++v) deg[v] = static_cast<int>(ig.incident[v].size());
  std::vector<bool> alive_v(ig.vertex_count(), true), alive_d(ig.dart_count(), true);

  std::vector<int> leaves;
  for (int v = 0; v < ig.vertex_count(); ++v) {
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    std::size_t pick = 0;
    if (rng) pick = static_cast<std::size_t>((*rng)() % leaves.size());
    const int leaf = leaves[pick];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    int d = -1;
    for (int x : ig.incident[leaf]) {
      if (alive_d[x]) d = x;
    }
    const int other = ig.far_end(d);
    alive_d[d] = alive_d[ig.reverse[d]] = false;
    alive_v[leaf] = false;
    if (--deg[other] == 1) leaves.push_back(other);
  }

  std::map<VertexId, std::string> verts;
  std::map<DartId, DartRecord> darts;
  for (int v = 0; v < ig.vertex_count(); ++v) {
    if (alive_v[v]) verts.emplace(ig.vertex_ids[v], g.label(ig.vertex_ids[v]));
  }
  for (int d = 0; d < ig.dart_count(); ++d) {
    if (alive_d[d]) darts.emplace(ig.dart_ids[d], g.darts().at(ig.dart_ids[d]));
  }
  return SerreGraph::from_parts(std::move(verts), std::move(darts));
}

}  // namespace

std::optional<SerreGraph> core(const SerreGraph& g) { return prune_leaves(g, nullptr); }

std::optional<SerreGraph> core_with_order(const SerreGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return prune_leaves(g, &rng);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Colors = std::vector<int>;

// Joint colour refinement over both graphs so that colour numbers are
// comparable. Returns false if some colour class has different sizes.
bool refine(const IndexedGraph& a, const IndexedGraph& b, Colors& ca, Colors& cb) {
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> table;
    auto signature = [](const IndexedGraph& g, const Colors& c, int v) {
      std::vector<int> sig;
      sig.reserve(g.incident[v].size() + 1);
      for (int d : g.incident[v]) sig.push_back(c[g.far_end(d)]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[v]);
      return sig;
    };
    std::vector<std::vector<int>> sa(a.vertex_count()), sb(b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) table.emplace(sa[v] = signature(a, ca, v), 0);
    for (int v = 0; v < b.vertex_count(); ++v) table.emplace(sb[v] = signature(b, cb, v), 0);
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    std::vector<int> count(next, 0);
    for (int v = 0; v < a.vertex_count(); ++v) ++count[ca[v] = table[sa[v]]];
    for (int v = 0; v < b.vertex_count(); ++v) --count[cb[v] = table[sb[v]]];
    for (int c : count) {
      if (c != 0) return false;
    }
    if (table.size() == classes) return true;
    classes = table.size();
  }
}

class IsoSearch {
 public:
  IsoSearch(const IndexedGraph& a, const IndexedGraph& b) : a_(a), b_(b) {
    mult_a_ = multiplicities(a);
    mult_b_ = multiplicities(b);
  }

  std::optional<std::vector<int>> run() {
    Colors ca(a_.vertex_count()), cb(b_.vertex_count());
    for (int v = 0; v < a_.vertex_count(); ++v) ca[v] = initial_color(a_, mult_a_, v);
    for (int v = 0; v < b_.vertex_count(); ++v) cb[v] = initial_color(b_, mult_b_, v);
    if (!refine(a_, b_, ca, cb)) return std::nullopt;
    map_.assign(a_.vertex_count(), -1);
    used_.assign(b_.vertex_count(), false);
    if (!extend(0, ca, cb)) return std::nullopt;
    return map_;
  }

 private:
  static std::vector<std::vector<int>> multiplicities(const IndexedGraph& g) {
    std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (int d = 0; d < g.dart_count(); ++d) ++m[g.endpoint[d]][g.far_end(d)];
    return m;
  }

  // Degree and loop count; the pruning the refinement starts from.
  static int initial_color(const IndexedGraph& g, const std::vector<std::vector<int>>& m, int v) {
    return static_cast<int>(g.incident[v].size()) * 4096 + m[v][v];
  }

  bool extend(int u, const Colors& ca, const Colors& cb) {
    if (u == a_.vertex_count()) return true;
    for (int w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || cb[w] != ca[u]) continue;
      if (!consistent(u, w)) continue;
      Colors na = ca, nb = cb;
      const int fresh = 1 + std::max(*std::max_element(na.begin(), na.end()),
                                     *std::max_element(nb.begin(), nb.end()));
      na[u] = fresh;
      nb[w] = fresh;
      if (!refine(a_, b_, na, nb)) continue;
      map_[u] = w;
      used_[w] = true;
      if (extend(u + 1, na, nb)) return true;
      map_[u] = -1;
      used_[w] = false;
    }
    return false;
  }

  bool consistent(int u, int w) const {
    if (mult_a_[u][u] != mult_b_[w][w]) return false;
    for (int x = 0; x < u; ++x) {
      if (mult_a_[u][x] != mult_b_[w][map_[x]]) return false;
    }
    return true;
  }

  const IndexedGraph& a_;
  const IndexedGraph& b_;
  std::vector<std::vector<int>> mult_a_, mult_b_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GraphIsomorphism> isomorphism(const SerreGraph& g1, const SerreGraph& g2) {
  const IndexedGraph a = index_graph(g1);
  const IndexedGraph b = index_graph(g2);
  if (a.vertex_count() != b.vertex_count() || a.dart_count() != b.dart_count()) return std::nullopt;

  auto vmap = IsoSearch(a, b).run();
  if (!vmap) return std::nullopt;

  // Given the vertex bijection, mapping each source dart (in order) to the
  // least free target dart with matching ends yields the least dart bijection.
  std::vector<int> dmap(a.dart_count(), -1);
  std::vector<bool> taken(b.dart_count(), false);
  for (int d = 0; d < a.dart_count(); ++d) {
    if (dmap[d] >= 0) continue;
    const int from = (*vmap)[a.endpoint[d]];
    const int to = (*vmap)[a.far_end(d)];
    for (int e : b.incident[from]) {
      if (taken[e] || b.far_end(e) != to) continue;
      dmap[d] = e;
      dmap[a.reverse[d]] = b.reverse[e];
      taken[e] = taken[b.reverse[e]] = true;
      break;
    }
    if (dmap[d] < 0) throw Error("isomorphism: inconsistent multiplicities");
  }

  GraphIsomorphism out;
  for (int v = 0; v < a.vertex_count(); ++v) out.vertices.emplace(a.vertex_ids[v], b.vertex_ids[(*vmap)[v]]);
  for (int d = 0; d < a.dart_count(); ++d) out.darts.emplace(a.dart_ids[d], b.dart_ids[dmap[d]]);
  return out;
}

bool is_isomorphism(const SerreGraph& g1, const SerreGraph& g2, const GraphIsomorphism& m) {
  if (m.vertices.size() != g1.vertex_count() || m.darts.size() != g1.dart_count()) return false;
  if (g1.vertex_count() != g2.vertex_count() || g1.dart_count() != g2.dart_count()) return false;
  std::set<VertexId> vimg;
  for (const auto& [v, w] : m.vertices) {
    if (!g1.has_vertex(v) || !g2.has_vertex(w) || !vimg.insert(w).second) return false;
  }
  std::set<DartId> dimg;
  for (const auto& [d, e] : m.darts) {
    if (!g1.has_dart(d) || !g2.has_dart(e) || !dimg.insert(e).second) return false;
  }
  for (const auto& [d, e] : m.darts) {
    if (m.darts.at(g1.reverse(d)) != g2.reverse(e)) return false;
    if (m.vertices.at(g1.endpoint(d)) != g2.endpoint(e)) return false;
  }
  return true;
}

GraphIsomorphism inverse(const GraphIsomorphism& m) {
  GraphIsomorphism out;
  for (const auto& [v, w] : m.vertices) out.vertices.emplace(w, v);
  for (const auto& [d, e] : m.darts) out.darts.emplace(e, d);
  return out;
}

GraphIsomorphism identity_isomorphism(const SerreGraph& g) {
  GraphIsomorphism out;
  for (const auto& [v, label] : g.vertices()) out.vertices.emplace(v, v);
  for (const auto& [d, rec] : g.darts()) out.darts.emplace(d, d);
  return out;
}

SerreGraph relabel(const SerreGraph& g, const GraphIsomorphism& m) {
  std::map<VertexId, std::string> verts;
  for (const auto& [v, label] : g.vertices()) {
    auto it = m.vertices.find(v);
    if (it == m.vertices.end()) throw GraphError("relabeling misses vertex '" + v.value + "'");
    if (!verts.emplace(it->second, label).second) {
      throw GraphError("relabeling is not injective at vertex '" + it->second.value + "'");
    }
  }
  std::map<DartId, DartRecord> darts;
  for (const auto& [d, rec] : g.darts()) {
    auto it = m.darts.find(d);
    if (it == m.darts.end()) throw GraphError("relabeling misses dart '" + d.value + "'");
    DartRecord out;
    if (rec.reverse) {
      auto r = m.darts.find(*rec.reverse);
      if (r == m.darts.end()) throw GraphError("relabeling misses dart '" + rec.reverse->value + "'");
      out.reverse = r->second;
    }
    if (rec.endpoint) out.endpoint = m.vertices.at(*rec.endpoint);
    if (!darts.emplace(it->second, std::move(out)).second) {
      throw GraphError("relabeling is not injective at dart '" + it->second.value + "'");
    }
  }
  if (m.vertices.size() != g.vertex_count() || m.darts.size() != g.dart_count()) {
    throw GraphError("relabeling mentions identifiers outside the graph");
  }
  return SerreGraph::from_parts(std::move(verts), std::move(darts));
}

}  // namespace nlgraph
