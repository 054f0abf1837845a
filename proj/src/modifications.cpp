#include "nlgraph/modifications.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "indexed.hpp"
#include "nlgraph/error.hpp"
#include "nlgraph/topo.hpp"

namespace nlgraph {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_fresh_vertex(const SerreGraph& g, const VertexId& v) {
  if (!is_plain_identifier(v.value)) throw ModificationError("bad vertex identifier '" + v.value + "'");
  if (g.has_vertex(v)) throw ModificationError("vertex '" + v.value + "' is not fresh");
}

void require_fresh_edge(const SerreGraph& g, const std::string& name) {
  if (!is_plain_identifier(name)) throw ModificationError("bad edge identifier '" + name + "'");
  if (g.has_dart(forward_dart(name)) || g.has_dart(backward_dart(name))) {
    throw ModificationError("edge '" + name + "' is not fresh");
  }
}

SerreGraph apply_expansion(SerreGraph g, const Expansion& m) {
  if (!g.has_vertex(m.at)) throw ModificationError("expansion at unknown vertex '" + m.at.value + "'");
  require_fresh_vertex(g, m.new_vertex);
  require_fresh_edge(g, m.new_edge);
  g.add_vertex(m.new_vertex);
  g.add_edge(m.new_edge, m.at, m.new_vertex);
  return g;
}

SerreGraph apply_subdivision(SerreGraph g, const Subdivision& m) {
  if (!g.has_dart(m.dart)) throw ModificationError("subdivision of unknown dart '" + m.dart.value + "'");
  require_fresh_vertex(g, m.new_vertex);
  if (m.first_edge == m.second_edge) throw ModificationError("subdivision needs two distinct edge names");
  require_fresh_edge(g, m.first_edge);
  require_fresh_edge(g, m.second_edge);
  const VertexId a = g.endpoint(m.dart);
  const VertexId b = g.endpoint(g.reverse(m.dart));
  g.remove_edge(m.dart);
  g.add_vertex(m.new_vertex);
  g.add_edge(m.first_edge, a, m.new_vertex);
  g.add_edge(m.second_edge, m.new_vertex, b);
  return g;
}

}  // namespace

VertexId fresh_vertex(const SerreGraph& g, std::string_view prefix) {
  for (std::size_t k = 0;; ++k) {
    VertexId v(std::string(prefix) + std::to_string(k));
    if (!g.has_vertex(v)) return v;
  }
}

std::string fresh_edge(const SerreGraph& g, std::string_view prefix, std::string_view skip) {
  for (std::size_t k = 0;; ++k) {
    std::string name = std::string(prefix) + std::to_string(k);
    if (name == skip) continue;
    if (!g.has_dart(forward_dart(name)) && !g.has_dart(backward_dart(name))) return name;
  }
}

SerreGraph apply(const SerreGraph& g, const Modification& m) {
  if (auto problems = validate(g); !problems.empty()) {
    throw ModificationError("cannot modify an invalid graph: " + problems.front());
  }
  return std::visit(Overloaded{
                        [&](const Expansion& e) { return apply_expansion(g, e); },
                        [&](const Subdivision& s) { return apply_subdivision(g, s); },
                        [&](const Relabeling& r) {
                          try {
                            return relabel(g, r.map);
                          } catch (const GraphError& err) {
                            throw ModificationError(err.what());
                          }
                        },
                    },
                    m);
}

SerreGraph apply_all(const SerreGraph& g, std::span<const Modification> steps) {
  SerreGraph cur = g;
  for (const auto& m : steps) cur = nlgraph::apply(cur, m);
  return cur;
}

// ---------------------------------------------------------------------------
// Certificate synthesis

namespace {

// One side of the certificate: the growing graph and its recorded steps.
struct Side {
  SerreGraph graph;
  std::vector<Modification> steps;

  // Subdivides `d` and returns the two darts replacing it, in path order.
  std::pair<DartId, DartId> subdivide(const DartId& d) {
    Subdivision s{d, fresh_vertex(graph, "n"), fresh_edge(graph, "s"), ""};
    s.second_edge = fresh_edge(graph, "s", s.first_edge);
    graph = nlgraph::apply(graph, s);
    steps.push_back(s);
    return {forward_dart(s.first_edge), forward_dart(s.second_edge)};
  }

  // Expands at `at`; returns the new vertex and the dart leaving `at`.
  std::pair<VertexId, DartId> expand(const VertexId& at) {
    Expansion e{at, fresh_vertex(graph, "n"), fresh_edge(graph, "t")};
    graph = nlgraph::apply(graph, e);
    steps.push_back(e);
    return {e.new_vertex, forward_dart(e.new_edge)};
  }
};

// Darts of the tree hanging at `root`, as (parent-side dart) in BFS order.
// Vertices in `stop` (the core) are never entered.
std::vector<DartId> hanging_tree(const SerreGraph& g, const VertexId& root, const std::set<VertexId>& stop) {
  std::vector<DartId> out;
  if (!g.has_vertex(root)) return out;
  std::set<VertexId> seen{root};
  std::vector<VertexId> frontier{root};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const DartId& d : g.darts_at(frontier[i])) {
      const VertexId& w = g.endpoint(g.reverse(d));
      if (stop.contains(w) || seen.contains(w)) continue;
      seen.insert(w);
      frontier.push_back(w);
      out.push_back(d);
    }
  }
  return out;
}

// Copies the tree given by `tree` (darts of `src`, BFS order, hanging at
// `src_root`) onto `side` at `dst_root`. Returns src -> side identifiers.
GraphIsomorphism graft(Side& side, const VertexId& dst_root, const SerreGraph& src,
                       const VertexId& src_root, const std::vector<DartId>& tree) {
  GraphIsomorphism copy;
  copy.vertices.emplace(src_root, dst_root);
  for (const DartId& d : tree) {
    const VertexId& parent = src.endpoint(d);
    const VertexId& child = src.endpoint(src.reverse(d));
    auto [v, nd] = side.expand(copy.vertices.at(parent));
    copy.vertices.emplace(child, v);
    copy.darts.emplace(d, nd);
    copy.darts.emplace(src.reverse(d), side.graph.reverse(nd));
  }
  return copy;
}

SerreGraph skeleton_of(const ChainDecomposition& dec) {
  SerreGraph k;
  for (const auto& v : dec.branch_vertices) k.add_vertex(v);
  for (std::size_t i = 0; i < dec.chains.size(); ++i) {
    k.add_edge("c" + std::to_string(i), dec.chains[i].from, dec.chains[i].to);
  }
  return k;
}

std::vector<DartId> chain_for_dart(const ChainDecomposition& dec, const SerreGraph& g, const DartId& d) {
  const bool flipped = d.value.front() == kReverseMarker;
  const std::size_t idx = std::stoul(d.value.substr(flipped ? 2 : 1));
  std::vector<DartId> out = dec.chains[idx].darts;
  if (flipped) {
    std::reverse(out.begin(), out.end());
    for (auto& x : out) x = g.reverse(x);
  }
  return out;
}

}  // namespace

std::optional<EquivalenceCertificate> certify(const SerreGraph& g1, const SerreGraph& g2) {
  detail::require_connected(g1, "certify");
  detail::require_connected(g2, "certify");
  if (!equivalent(g1, g2)) return std::nullopt;
  if (auto iso = isomorphism(g1, g2)) return EquivalenceCertificate{{}, {}, *iso};

  Side s1{g1, {}}, s2{g2, {}};
  GraphIsomorphism fin;
  std::vector<std::pair<VertexId, VertexId>> anchors;
  std::set<VertexId> core1, core2;

  const auto c1 = core(g1);
  const auto c2 = core(g2);
  if (!c1) {
    const VertexId r1 = g1.vertices().begin()->first;
    const VertexId r2 = g2.vertices().begin()->first;
    anchors.emplace_back(r1, r2);
    fin.vertices.emplace(r1, r2);
    core1 = {r1};
    core2 = {r2};
  } else {
    for (const auto& [v, l] : c1->vertices()) core1.insert(v);
    for (const auto& [v, l] : c2->vertices()) core2.insert(v);
    const ChainDecomposition dec1 = decompose_chains(*c1);
    const ChainDecomposition dec2 = decompose_chains(*c2);
    const SerreGraph k1 = skeleton_of(dec1);
    const SerreGraph k2 = skeleton_of(dec2);
    const auto phi = isomorphism(k1, k2);
    if (!phi) throw Error("certify: equivalent cores with non-isomorphic skeletons");

    for (std::size_t i = 0; i < dec1.chains.size(); ++i) {
      const DartId d1 = forward_dart("c" + std::to_string(i));
      std::vector<DartId> path1 = dec1.chains[i].darts;
      std::vector<DartId> path2 = chain_for_dart(dec2, g2, phi->darts.at(d1));
      while (path1.size() < path2.size()) {
        auto [x, y] = s1.subdivide(path1.back());
        path1.back() = x;
        path1.push_back(y);
      }
      while (path2.size() < path1.size()) {
        auto [x, y] = s2.subdivide(path2.back());
        path2.back() = x;
        path2.push_back(y);
      }
      for (std::size_t j = 0; j < path1.size(); ++j) {
        const DartId& a = path1[j];
        const DartId& b = path2[j];
        fin.darts.emplace(a, b);
        fin.darts.emplace(s1.graph.reverse(a), s2.graph.reverse(b));
        fin.vertices.emplace(s1.graph.endpoint(a), s2.graph.endpoint(b));
        fin.vertices.emplace(s1.graph.endpoint(s1.graph.reverse(a)), s2.graph.endpoint(s2.graph.reverse(b)));
      }
    }
    for (const auto& [x, y] : fin.vertices) anchors.emplace_back(x, y);
  }

  for (const auto& [x, y] : anchors) {
    const auto t1 = hanging_tree(g1, x, core1);
    const auto t2 = hanging_tree(g2, y, core2);
    // side 1 receives a copy of g2's tree, side 2 a copy of g1's tree
    const GraphIsomorphism into1 = graft(s1, x, g2, y, t2);
    const GraphIsomorphism into2 = graft(s2, y, g1, x, t1);
    for (const auto& [v2, v1] : into1.vertices) {
      if (v2 != y) fin.vertices.emplace(v1, v2);
    }
    for (const auto& [d2, d1] : into1.darts) fin.darts.emplace(d1, d2);
    for (const auto& [v1, v2] : into2.vertices) {
      if (v1 != x) fin.vertices.emplace(v1, v2);
    }
    for (const auto& [d1, d2] : into2.darts) fin.darts.emplace(d1, d2);
  }

  return EquivalenceCertificate{std::move(s1.steps), std::move(s2.steps), std::move(fin)};
}

bool verify(const SerreGraph& g1, const SerreGraph& g2, const EquivalenceCertificate& cert) {
  auto replay = [](const SerreGraph& g, const std::vector<Modification>& steps, const char* side) {
    try {
      return apply_all(g, steps);
    } catch (const ModificationError& e) {
      throw CertificateError(std::string(side) + ": " + e.what());
    }
  };
  const SerreGraph end1 = replay(g1, cert.seq1, "first sequence");
  const SerreGraph end2 = replay(g2, cert.seq2, "second sequence");
  for (const auto& [v, w] : cert.final_iso.vertices) {
    if (!end1.has_vertex(v)) throw CertificateError("final map: unknown source vertex '" + v.value + "'");
    if (!end2.has_vertex(w)) throw CertificateError("final map: unknown target vertex '" + w.value + "'");
  }
  for (const auto& [d, e] : cert.final_iso.darts) {
    if (!end1.has_dart(d)) throw CertificateError("final map: unknown source dart '" + d.value + "'");
    if (!end2.has_dart(e)) throw CertificateError("final map: unknown target dart '" + e.value + "'");
  }
  return is_isomorphism(end1, end2, cert.final_iso);
}

// ---------------------------------------------------------------------------

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

Relabeling random_relabeling(const SerreGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> verts;
  for (const auto& [v, l] : g.vertices()) verts.push_back(v);
  std::vector<VertexId> images = verts;
  for (std::size_t i = images.size(); i > 1; --i) std::swap(images[i - 1], images[draw(rng, i)]);

  const std::vector<DartId> reps = g.edge_representatives();
  std::vector<DartId> targets = reps;
  for (std::size_t i = targets.size(); i > 1; --i) std::swap(targets[i - 1], targets[draw(rng, i)]);

  Relabeling r;
  for (std::size_t i = 0; i < verts.size(); ++i) r.map.vertices.emplace(verts[i], images[i]);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    DartId a = targets[i], b = g.reverse(targets[i]);
    if (draw(rng, 2) == 1) std::swap(a, b);
    r.map.darts.emplace(reps[i], a);
    r.map.darts.emplace(g.reverse(reps[i]), b);
  }
  return r;
}

}  // namespace

ModifiedGraph random_modifications(const SerreGraph& g, std::size_t n, std::uint64_t seed) {
  detail::require_connected(g, "random_modifications");
  std::mt19937_64 rng(seed);
  ModifiedGraph out{g, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kind = draw(rng, 10);
    Modification m;
    if (kind == 0) {
      m = random_relabeling(out.graph, rng);
    } else if (kind <= 5 || out.graph.edge_count() == 0) {
      auto it = out.graph.vertices().begin();
      std::advance(it, static_cast<std::ptrdiff_t>(draw(rng, out.graph.vertex_count())));
      m = Expansion{it->first, fresh_vertex(out.graph, "m"), fresh_edge(out.graph, "f")};
    } else {
      auto it = out.graph.darts().begin();
      std::advance(it, static_cast<std::ptrdiff_t>(draw(rng, out.graph.dart_count())));
      const std::string first = fresh_edge(out.graph, "f");
      m = Subdivision{it->first, fresh_vertex(out.graph, "m"), first, fresh_edge(out.graph, "f", first)};
    }
    out.graph = nlgraph::apply(out.graph, m);
    out.steps.push_back(std::move(m));
  }
  return out;
}

}  // namespace nlgraph
