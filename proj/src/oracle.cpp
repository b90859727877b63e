#include "sclub/oracle.hpp"

#include <algorithm>
#include <functional>

#include "sclub/verifier.hpp"

namespace sclub {

namespace {

// Visits all size-`r` index subsets of {0..m-1} in lexicographic order.
// Stops early when visit returns true.
bool for_each_combination(int m, int r, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > m) return false;
  while (true) {
    if (visit(idx)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool feasible_undirected(const Graph& g, int s, const std::vector<Edge>& f) {
  Graph h = delete_edges(g, f);
  for (int u = 0; u < h.n(); ++u) {
    auto dist = bfs_distances(h, u);
    for (int d : dist)
      if (d > s) return false;
  }
  return true;
}

bool feasible_directed(const Digraph& dg, int s, const std::vector<std::pair<int, int>>& f) {
  Digraph h = delete_arcs(dg, f);
  Components wc = weak_components(h);
  for (int u = 0; u < h.n(); ++u) {
    auto dist = bfs_distances_out(h, u);
    for (int v = 0; v < h.n(); ++v)
      if (dist[v] != kUnreachable && dist[v] > s && wc.component_id[u] == wc.component_id[v])
        return false;
  }
  return true;
}

}  // namespace

OracleResult opt_undirected(const Instance& inst) {
  const Graph& g = inst.undirected_graph();
  OracleResult res;
  long long kmax = std::min<long long>(inst.k, g.m());
  for (long long r = 0; r <= kmax; ++r) {
    bool found = for_each_combination(g.m(), static_cast<int>(r), [&](const std::vector<int>& idx) {
      std::vector<Edge> f;
      f.reserve(idx.size());
      for (int i : idx) f.push_back(g.edges()[i]);
      if (!feasible_undirected(g, inst.s, f)) return false;
      res.opt = r;
      res.witness = DeletionSet::of_edges(inst, f);
      res.witness.verified = true;
      return true;
    });
    if (found) return res;
  }
  return res;
}

OracleResult opt_directed(const Instance& inst) {
  const Digraph& d = inst.directed_graph();
  OracleResult res;
  long long kmax = std::min<long long>(inst.k, d.m());
  for (long long r = 0; r <= kmax; ++r) {
    bool found = for_each_combination(d.m(), static_cast<int>(r), [&](const std::vector<int>& idx) {
      std::vector<std::pair<int, int>> f;
      f.reserve(idx.size());
      for (int i : idx) f.push_back(d.arcs()[i]);
      if (!feasible_directed(d, inst.s, f)) return false;
      res.opt = r;
      res.witness = DeletionSet::of_arcs(f);
      res.witness.verified = true;
      return true;
    });
    if (found) return res;
  }
  return res;
}

OracleResult opt_weighted(const Instance& inst) {
  const Graph& g = inst.undirected_graph();
  OracleResult res;
  long long kmax = std::min<long long>(inst.k, g.m());
  // Weights are >= 1, so any solution of total weight <= k has at most k edges.
  for (long long r = 0; r <= kmax; ++r) {
    for_each_combination(g.m(), static_cast<int>(r), [&](const std::vector<int>& idx) {
      std::vector<Edge> f;
      long long w = 0;
      for (int i : idx) {
        f.push_back(g.edges()[i]);
        w += inst.weight_of(g.edges()[i]);
      }
      if (w > inst.k) return false;
      if (res.opt && w >= *res.opt) return false;
      if (!feasible_undirected(g, inst.s, f)) return false;
      res.opt = w;
      res.witness = DeletionSet::of_edges(inst, f);
      res.witness.verified = true;
      return false;  // keep searching for a lighter set
    });
  }
  return res;
}

OracleResult opt_undirected_by_partitions(const Instance& inst) {
  const Graph& g = inst.undirected_graph();
  int n = g.n();
  OracleResult res;
  if (n == 0) {
    res.opt = 0;
    res.witness = DeletionSet::of_edges(inst, {});
    res.witness.verified = true;
    return res;
  }
  std::vector<int> block(n, 0);
  // Restricted growth strings enumerate all set partitions of V.
  std::function<void(int, int)> rec = [&](int v, int maxb) {
    if (v == n) {
      std::vector<Edge> crossing;
      for (auto [a, b] : g.edges())
        if (block[a] != block[b]) crossing.push_back({a, b});
      long long cost = static_cast<long long>(crossing.size());
      if (cost > inst.k) return;
      if (res.opt && cost >= *res.opt) return;
      std::vector<std::vector<int>> blocks(maxb);
      for (int u = 0; u < n; ++u) blocks[block[u]].push_back(u);
      for (auto& bl : blocks)
        if (diameter(g, bl) > inst.s) return;
      res.opt = cost;
      res.witness = DeletionSet::of_edges(inst, crossing);
      res.witness.verified = true;
      return;
    }
    for (int b = 0; b <= maxb; ++b) {
      block[v] = b;
      rec(v + 1, std::max(maxb, b + 1));
    }
  };
  rec(0, 0);
  return res;
}

}  // namespace sclub
