#include "sclub/verifier.hpp"

#include <stdexcept>

namespace sclub {

Instance make_undirected_instance(Graph g, int s, long long k) {
  Instance inst;
  inst.graph = std::move(g);
  inst.s = s;
  inst.k = k;
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return inst;
}

Instance make_directed_instance(Digraph d, int s, long long k) {
  Instance inst;
  inst.graph = std::move(d);
  inst.s = s;
  inst.k = k;
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return inst;
}

Digraph bidirect(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(2 * g.m());
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.n(), arcs);
}

VerifyResult verify_undirected(const Instance& inst, const DeletionSet& f) {
  const Graph& g = inst.undirected_graph();
  long long w = 0;
  std::vector<Edge> edges;
  edges.reserve(f.members.size());
  for (auto [u, v] : f.members) {
    Edge e = make_edge(u, v);
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("verify_undirected: f references a non-edge");
    edges.push_back(e);
    w += inst.weight_of(e);
  }
  VerifyResult res;
  if (w > inst.k) {
    res.feasible = false;
    res.witness = Witness{.budget_excess = true, .total_weight = w};
    return res;
  }
  Graph h = delete_edges(g, edges);
  for (int u = 0; u < h.n(); ++u) {
    auto dist = bfs_distances(h, u);
    for (int v = 0; v < h.n(); ++v)
      if (dist[v] != kUnreachable && dist[v] > inst.s) {
        res.feasible = false;
        res.witness = Witness{.u = u, .v = v, .distance = dist[v], .total_weight = w};
        return res;
      }
  }
  res.feasible = true;
  return res;
}

VerifyResult verify_directed(const Instance& inst, const DeletionSet& f) {
  const Digraph& d = inst.directed_graph();
  for (auto [u, v] : f.members)
    if (!d.has_arc(u, v)) throw std::invalid_argument("verify_directed: f references a non-arc");
  VerifyResult res;
  long long w = static_cast<long long>(f.members.size());
  if (w > inst.k) {
    res.feasible = false;
    res.witness = Witness{.budget_excess = true, .total_weight = w};
    return res;
  }
  Digraph h = delete_arcs(d, f.members);
  Components wc = weak_components(h);
  // Distances are computed within the component's arc set; since weak
  // components are vertex-disjoint and arcs never cross them, BFS on h
  // already stays inside the component.
  for (int u = 0; u < h.n(); ++u) {
    auto dist = bfs_distances_out(h, u);
    for (int v = 0; v < h.n(); ++v)
      if (dist[v] != kUnreachable && wc.component_id[v] == wc.component_id[u] &&
          dist[v] > inst.s) {
        res.feasible = false;
        res.witness = Witness{.u = u, .v = v, .distance = dist[v], .total_weight = w};
        return res;
      }
  }
  res.feasible = true;
  return res;
}

GrowthCheck distance_growth_check(const Graph& g, const DeletionSet& f, int t) {
  std::vector<Edge> edges;
  for (auto [u, v] : f.members) edges.push_back(make_edge(u, v));
  Graph h = delete_edges(g, edges);
  long long slack = static_cast<long long>(edges.size()) * (t - 3);
  GrowthCheck res;
  for (int u = 0; u < g.n(); ++u) {
    auto before = bfs_distances(g, u);
    auto after = bfs_distances(h, u);
    for (int v = 0; v < g.n(); ++v) {
      if (after[v] == kUnreachable) continue;
      if (after[v] > before[v] + slack) {
        res.holds = false;
        res.u = u;
        res.v = v;
        res.before = before[v];
        res.after = after[v];
        return res;
      }
    }
  }
  return res;
}

}  // namespace sclub
