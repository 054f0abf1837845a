#include "nlgraph/checks/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "nlgraph/graph_core.hpp"
#include "nlgraph/valuations.hpp"

namespace nlgraph::checks {

bool tree_by_reduced_paths(const SerreGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (const auto& [u, lu] : g.vertices()) {
    for (const auto& [v, lv] : g.vertices()) {
      if (enumerate_reduced_paths(g, u, v, g.edge_count()).size() != 1) return false;
    }
  }
  return true;
}

namespace {

using Multiplicities = std::map<std::pair<VertexId, VertexId>, std::size_t>;

Multiplicities edge_multiplicities(const SerreGraph& g) {
  Multiplicities out;
  for (const auto& [d, rec] : g.darts()) ++out[{g.endpoint(d), g.endpoint(g.reverse(d))}];
  return out;
}

}  // namespace

bool brute_force_isomorphic(const SerreGraph& g1, const SerreGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.dart_count() != g2.dart_count()) return false;
  std::vector<VertexId> a, b;
  for (const auto& [v, l] : g1.vertices()) a.push_back(v);
  for (const auto& [v, l] : g2.vertices()) b.push_back(v);
  const Multiplicities m1 = edge_multiplicities(g1);
  const Multiplicities m2 = edge_multiplicities(g2);
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [key, count] : m1) {
      const auto i = std::find(a.begin(), a.end(), key.first) - a.begin();
      const auto j = std::find(a.begin(), a.end(), key.second) - a.begin();
      auto it = m2.find({b[perm[i]], b[perm[j]]});
      if (it == m2.end() || it->second != count) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

SerreGraph subdivide_edges(const SerreGraph& g, const std::vector<DartId>& reps, const std::vector<std::size_t>& counts) {
  SerreGraph out;
  for (const auto& [v, l] : g.vertices()) out.add_vertex(v, l);
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    VertexId prev = g.endpoint(reps[i]);
    const VertexId last = g.endpoint(g.reverse(reps[i]));
    for (std::size_t k = 0; k < counts[i]; ++k) {
      const VertexId mid("z" + std::to_string(fresh));
      out.add_vertex(mid);
      out.add_edge("y" + std::to_string(fresh), prev, mid);
      ++fresh;
      prev = mid;
    }
    out.add_edge("y" + std::to_string(fresh++), prev, last);
  }
  return out;
}

namespace {

std::vector<std::size_t> bucket_key(const SerreGraph& g) {
  std::vector<std::size_t> key{g.vertex_count(), g.edge_count()};
  std::vector<std::size_t> degrees;
  for (const auto& [v, l] : g.vertices()) degrees.push_back(degree(g, v));
  std::sort(degrees.begin(), degrees.end());
  key.insert(key.end(), degrees.begin(), degrees.end());
  std::vector<std::size_t> mult;
  for (const auto& [k, c] : edge_multiplicities(g)) mult.push_back(c);
  std::sort(mult.begin(), mult.end());
  key.insert(key.end(), mult.begin(), mult.end());
  return key;
}

void distributions(std::size_t slots, std::size_t budget, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == slots) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k <= budget; ++k) {
    cur.push_back(k);
    distributions(slots, budget - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t SubdivisionOracle::class_of(SerreGraph g) {
  auto& bucket = buckets_[bucket_key(g)];
  for (const auto& [h, id] : bucket) {
    if (isomorphism(g, h)) return id;
  }
  bucket.emplace_back(std::move(g), next_id_);
  return next_id_++;
}

std::set<std::size_t> SubdivisionOracle::reachable_classes(const SerreGraph& g) {
  const std::vector<DartId> reps = g.edge_representatives();
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  distributions(reps.size(), max_extra_, cur, all);
  std::set<std::size_t> out;
  for (const auto& counts : all) out.insert(class_of(subdivide_edges(g, reps, counts)));
  return out;
}

bool SubdivisionOracle::common_subdivision(const SerreGraph& g1, const SerreGraph& g2) {
  const auto a = reachable_classes(g1);
  const auto b = reachable_classes(g2);
  return std::any_of(a.begin(), a.end(), [&](std::size_t id) { return b.contains(id); });
}

// ---------------------------------------------------------------------------

namespace {

const Polynomial kW1 = Polynomial::variable(2, 0);
const Polynomial kW2 = Polynomial::variable(2, 1);

// z1 = w1, z2 = w1 * w2
Polynomial first_chart(const Polynomial& f) {
  const Polynomial images[] = {kW1, kW1 * kW2};
  return compose(f, images);
}

// z1 = w1 * w2, z2 = w2
Polynomial second_chart(const Polynomial& f) {
  const Polynomial images[] = {kW1 * kW2, kW2};
  return compose(f, images);
}

Integer ideal_order(const Polynomial& x, const Polynomial& y, int w1, int w2) {
  const Weights beta({Rational(w1), Rational(w2)});
  const Polynomial gens[] = {x, y};
  const ExtendedRational v = value_on_ideal(beta, gens);
  return numerator(v.value());
}

}  // namespace

BlowUpChartOracle::BlowUpChartOracle() {
  const Chart plane{kW1, kW2};
  blow_up_point(plane, VertexId("v0"));
}

Integer BlowUpChartOracle::blow_up_point(const Chart& local, const VertexId& fresh) {
  const Integer b = ideal_order(local.x, local.y, 1, 1);
  Component c{{first_chart(local.x), first_chart(local.y)}, 0, b};
  check_order_along(c.free_chart, b, fresh);
  components_[fresh] = std::move(c);
  return b;
}

void BlowUpChartOracle::check_order_along(const Chart& c, const Integer& expected, const VertexId& who) {
  const Integer along = ideal_order(c.x, c.y, 1, 0);
  if (along != expected) {
    problems_.push_back("order of the ideal along " + who.value + " is " + along.str() + ", expected " + expected.str());
  }
}

Integer BlowUpChartOracle::free(const VertexId& v, const VertexId& fresh) {
  Component& comp = components_.at(v);
  const int c = ++comp.used_points;
  const Polynomial images[] = {kW1, kW2 + Polynomial::constant(2, Rational(c))};
  const Chart local{compose(comp.free_chart.x, images), compose(comp.free_chart.y, images)};
  const Integer b = blow_up_point(local, fresh);
  const Chart edge{second_chart(local.x), second_chart(local.y)};
  if (ideal_order(edge.x, edge.y, 1, 0) != components_.at(v).multiplicity || ideal_order(edge.x, edge.y, 0, 1) != b) {
    problems_.push_back("pullback near " + v.value + " and " + fresh.value + " is not the expected monomial");
  }
  edges_[{v, fresh}] = edge;
  return b;
}

Integer BlowUpChartOracle::satellite(const VertexId& u, const VertexId& v, const VertexId& fresh) {
  EdgeKey key{u, v};
  if (!edges_.contains(key)) key = {v, u};
  const Chart local = edges_.at(key);
  const auto& [a, b_side] = key;
  const Integer b = blow_up_point(local, fresh);
  const Chart near_second{first_chart(local.x), first_chart(local.y)};
  const Chart near_first{second_chart(local.x), second_chart(local.y)};
  edges_.erase(key);
  edges_[{fresh, b_side}] = near_second;
  edges_[{a, fresh}] = near_first;
  for (const auto& [k, ch] : {std::pair{EdgeKey{fresh, b_side}, near_second}, std::pair{EdgeKey{a, fresh}, near_first}}) {
    if (ideal_order(ch.x, ch.y, 1, 0) != components_.at(k.first).multiplicity ||
        ideal_order(ch.x, ch.y, 0, 1) != components_.at(k.second).multiplicity) {
      problems_.push_back("pullback near " + k.first.value + " and " + k.second.value + " is not the expected monomial");
    }
  }
  return b;
}

std::map<VertexId, Integer> BlowUpChartOracle::multiplicities() const {
  std::map<VertexId, Integer> out;
  for (const auto& [v, c] : components_) out.emplace(v, ideal_order(c.free_chart.x, c.free_chart.y, 1, 0));
  return out;
}

}  // namespace nlgraph::checks
