#include "sclub/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sclub {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v || !has_vertex(u) || !has_vertex(v)) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = (&nb == &adj_[u]) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), w);
}

std::pair<Graph, std::vector<int>> Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> newid(n_, -1);
  std::vector<int> old;
  old.reserve(keep.size());
  for (int v : keep) {
    if (newid[v] == -1) {
      newid[v] = static_cast<int>(old.size());
      old.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (newid[u] != -1 && newid[v] != -1) es.push_back(make_edge(newid[u], newid[v]));
  return {Graph(static_cast<int>(old.size()), es), old};
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs)
    : n_(n), out_(n), in_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  arcs_ = arcs;
  for (auto [u, v] : arcs_) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw std::invalid_argument("parallel arc");
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& nb : out_) std::sort(nb.begin(), nb.end());
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

namespace {

template <typename NeighborFn>
std::vector<int> bfs_impl(int n, int source, NeighborFn&& nbs) {
  std::vector<int> dist(n, kUnreachable);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : nbs(u))
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (!g.has_vertex(source)) throw std::out_of_range("bfs source out of range");
  return bfs_impl(g.n(), source, [&](int u) -> const std::vector<int>& { return g.neighbors(u); });
}

std::vector<int> bfs_distances_out(const Digraph& d, int source) {
  if (source < 0 || source >= d.n()) throw std::out_of_range("bfs source out of range");
  return bfs_impl(d.n(), source, [&](int u) -> const std::vector<int>& { return d.out(u); });
}

int diameter(const Graph& g, const std::optional<std::vector<int>>& subset) {
  const Graph* gp = &g;
  Graph sub;
  if (subset) {
    auto [h, ids] = g.induced(*subset);
    sub = std::move(h);
    gp = &sub;
  }
  int best = 0;
  for (int s = 0; s < gp->n(); ++s) {
    auto dist = bfs_distances(*gp, s);
    for (int v = 0; v < gp->n(); ++v)
      if (dist[v] != kUnreachable) best = std::max(best, dist[v]);
  }
  return best;
}

Components components(const Graph& g) {
  Components c;
  c.component_id.assign(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (c.component_id[s] != -1) continue;
    int id = c.count++;
    std::deque<int> q{s};
    c.component_id[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.neighbors(u))
        if (c.component_id[v] == -1) {
          c.component_id[v] = id;
          q.push_back(v);
        }
    }
  }
  return c;
}

Components weak_components(const Digraph& d) {
  Components c;
  c.component_id.assign(d.n(), -1);
  for (int s = 0; s < d.n(); ++s) {
    if (c.component_id[s] != -1) continue;
    int id = c.count++;
    std::deque<int> q{s};
    c.component_id[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : d.out(u))
        if (c.component_id[v] == -1) {
          c.component_id[v] = id;
          q.push_back(v);
        }
      for (int v : d.in(u))
        if (c.component_id[v] == -1) {
          c.component_id[v] = id;
          q.push_back(v);
        }
    }
  }
  return c;
}

TwinPartition twin_partition(const Graph& g) {
  // Two keys per vertex: open neighborhood and closed neighborhood. Vertices
  // grouped by equal closed keys are true twins, by equal open keys false
  // twins. Every vertex is alone in at least one of the two groupings unless
  // it has a twin, and it cannot have both kinds at once (that would force a
  // self-loop), so assigning false-twin groups first and true-twin groups to
  // the rest is well defined.
  int n = g.n();
  std::vector<std::vector<int>> open(n), closed(n);
  for (int v = 0; v < n; ++v) {
    open[v] = g.neighbors(v);
    closed[v] = g.neighbors(v);
    closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
  }
  std::map<std::vector<int>, std::vector<int>> by_open, by_closed;
  for (int v = 0; v < n; ++v) {
    by_open[open[v]].push_back(v);
    by_closed[closed[v]].push_back(v);
  }
  TwinPartition tp;
  tp.class_of.assign(n, -1);
  auto add_class = [&](const std::vector<int>& vs, TwinPartition::Kind kind) {
    int idx = static_cast<int>(tp.classes.size());
    tp.classes.push_back(vs);
    tp.kind.push_back(kind);
    for (int v : vs) tp.class_of[v] = idx;
  };
  for (auto& [key, vs] : by_open)
    if (vs.size() >= 2) add_class(vs, TwinPartition::Kind::kFalseTwin);
  for (auto& [key, vs] : by_closed) {
    std::vector<int> rest;
    for (int v : vs)
      if (tp.class_of[v] == -1) rest.push_back(v);
    if (rest.size() >= 2) add_class(rest, TwinPartition::Kind::kTrueTwin);
  }
  for (int v = 0; v < n; ++v)
    if (tp.class_of[v] == -1) add_class({v}, TwinPartition::Kind::kFalseTwin);
  return tp;
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& f) {
  std::vector<Edge> del;
  del.reserve(f.size());
  for (auto [u, v] : f) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edges: unknown edge");
    del.push_back(make_edge(u, v));
  }
  std::sort(del.begin(), del.end());
  del.erase(std::unique(del.begin(), del.end()), del.end());
  std::vector<Edge> kept;
  kept.reserve(g.edges().size() - del.size());
  std::set_difference(g.edges().begin(), g.edges().end(), del.begin(), del.end(),
                      std::back_inserter(kept));
  return Graph(g.n(), kept);
}

Digraph delete_arcs(const Digraph& d, const std::vector<std::pair<int, int>>& f) {
  std::vector<std::pair<int, int>> del = f;
  for (auto [u, v] : del)
    if (!d.has_arc(u, v)) throw std::invalid_argument("delete_arcs: unknown arc");
  std::sort(del.begin(), del.end());
  del.erase(std::unique(del.begin(), del.end()), del.end());
  std::vector<std::pair<int, int>> kept;
  std::set_difference(d.arcs().begin(), d.arcs().end(), del.begin(), del.end(),
                      std::back_inserter(kept));
  return Digraph(d.n(), kept);
}

}  // namespace sclub
