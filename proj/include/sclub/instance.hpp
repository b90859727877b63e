#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sclub/graph.hpp"

namespace sclub {

// Closed integer interval per vertex; uv is an edge iff intervals intersect.
struct IntervalModel {
  std::vector<std::pair<long long, long long>> range;  // [l_v, r_v]
};

// One problem occurrence: graph (or digraph), diameter bound s, budget k,
// optional edge weights and interval model, free-form provenance tags.
struct Instance {
  std::variant<Graph, Digraph> graph;
  int s = 1;
  long long k = 0;
  std::optional<std::map<Edge, long long>> weights;  // >= 1, covers E exactly
  std::optional<IntervalModel> interval_model;
  std::map<std::string, std::string> metadata;

  bool directed() const { return std::holds_alternative<Digraph>(graph); }
  const Graph& undirected_graph() const { return std::get<Graph>(graph); }
  const Digraph& directed_graph() const { return std::get<Digraph>(graph); }

  long long weight_of(Edge e) const {
    if (!weights) return 1;
    auto it = weights->find(e);
    return it == weights->end() ? 1 : it->second;
  }
};

// A claimed solution: set of edges (or arcs, stored as ordered pairs).
struct DeletionSet {
  std::vector<std::pair<int, int>> members;
  long long total_weight = 0;  // sum of instance weights, weight 1 default
  bool verified = false;

  static DeletionSet of_edges(const Instance& inst, std::vector<Edge> edges) {
    DeletionSet f;
    long long w = 0;
    for (auto& e : edges) {
      e = make_edge(e.first, e.second);
      w += inst.weight_of(e);
    }
    f.members = std::move(edges);
    f.total_weight = w;
    return f;
  }
  static DeletionSet of_arcs(std::vector<std::pair<int, int>> arcs) {
    DeletionSet f;
    f.total_weight = static_cast<long long>(arcs.size());
    f.members = std::move(arcs);
    return f;
  }
};

Instance make_undirected_instance(Graph g, int s, long long k);
Instance make_directed_instance(Digraph d, int s, long long k);

// Replaces every edge {u,v} by the two arcs (u,v),(v,u); used by the
// directed/undirected coincidence checks.
Digraph bidirect(const Graph& g);

}  // namespace sclub
