#include "nlgraph/checks/generators.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "nlgraph/graph_core.hpp"

namespace nlgraph::checks {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

namespace {

VertexId vname(std::size_t i) { return VertexId("g" + std::to_string(i)); }

SerreGraph random_tree(Rng& rng, std::size_t n) {
  SerreGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1));
    if (uniform(rng, 0, 1)) {
      g.add_edge("k" + std::to_string(i - 1), vname(parent), vname(i));
    } else {
      g.add_edge("k" + std::to_string(i - 1), vname(i), vname(parent));
    }
  }
  return g;
}

void add_random_edges(Rng& rng, SerreGraph& g, std::size_t n, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    g.add_edge("x" + std::to_string(j), vname(a), vname(b));
  }
}

}  // namespace

SerreGraph random_connected_graph(Rng& rng, std::size_t max_vertices, std::size_t max_extra) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_vertices)));
  SerreGraph g = random_tree(rng, n);
  add_random_edges(rng, g, n, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_extra))));
  return g;
}

SerreGraph random_graph_with_betti(Rng& rng, std::size_t vertices, std::size_t extra) {
  SerreGraph g = random_tree(rng, vertices);
  add_random_edges(rng, g, vertices, extra);
  return g;
}

namespace {

// Cheap isomorphism invariant used to bucket candidates before exact tests.
std::vector<std::size_t> invariant(const SerreGraph& g) {
  std::vector<std::size_t> key{g.vertex_count(), g.edge_count()};
  std::vector<std::pair<std::size_t, std::size_t>> local;
  for (const auto& [v, l] : g.vertices()) {
    std::size_t loops = 0;
    for (const DartId& d : g.darts_at(v)) {
      if (g.endpoint(g.reverse(d)) == v) ++loops;
    }
    local.emplace_back(degree(g, v), loops / 2);
  }
  std::sort(local.begin(), local.end());
  for (auto [d, l] : local) {
    key.push_back(d);
    key.push_back(l);
  }
  return key;
}

void enumerate_multisets(std::size_t n, std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                         std::size_t start, std::vector<std::size_t>& chosen,
                         std::map<std::vector<std::size_t>, std::vector<SerreGraph>>& classes) {
  if (chosen.size() == m) {
    SerreGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      g.add_edge("k" + std::to_string(k), vname(slots[chosen[k]].first), vname(slots[chosen[k]].second));
    }
    if (!is_connected(g)) return;
    auto& bucket = classes[invariant(g)];
    for (const auto& h : bucket) {
      if (isomorphism(g, h)) return;
    }
    bucket.push_back(std::move(g));
    return;
  }
  for (std::size_t s = start; s < slots.size(); ++s) {
    chosen.push_back(s);
    enumerate_multisets(n, m, slots, s, chosen, classes);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<SerreGraph> small_connected_graphs(std::size_t max_edges) {
  std::vector<SerreGraph> out;
  for (std::size_t m = 0; m <= max_edges; ++m) {
    for (std::size_t n = 1; n <= m + 1; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) slots.emplace_back(a, b);
      }
      std::map<std::vector<std::size_t>, std::vector<SerreGraph>> classes;
      std::vector<std::size_t> chosen;
      enumerate_multisets(n, m, slots, 0, chosen, classes);
      for (auto& [key, bucket] : classes) {
        for (auto& g : bucket) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t den) {
  std::int64_t p = 0;
  while (p == 0) p = uniform(rng, -bound, bound);
  return Rational(Integer(p), Integer(uniform(rng, 1, den)));
}

Polynomial random_polynomial(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t max_terms, bool allow_zero) {
  for (;;) {
    Polynomial f(arity);
    const auto terms = uniform(rng, allow_zero ? 0 : 1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
      Exponents e(arity, 0);
      auto budget = uniform(rng, 0, max_degree);
      for (std::size_t i = 0; i < arity && budget > 0; ++i) {
        const auto k = uniform(rng, 0, budget);
        e[i] = static_cast<std::uint32_t>(k);
        budget -= k;
      }
      std::shuffle(e.begin(), e.end(), rng);
      f.add_term(e, random_rational(rng, 9, 4));
    }
    if (allow_zero || !f.is_zero()) return f;
  }
}

Weights random_weights(Rng& rng, std::size_t arity, bool allow_zero) {
  std::vector<Rational> beta;
  for (std::size_t i = 0; i < arity; ++i) {
    if (allow_zero && uniform(rng, 0, 4) == 0) {
      beta.emplace_back(0);
    } else {
      beta.emplace_back(Integer(uniform(rng, 1, 12)), Integer(uniform(rng, 1, 6)));
    }
  }
  return Weights(std::move(beta));
}

}  // namespace nlgraph::checks
