#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sclub {

using Vertex = int;
using Edge = std::pair<int, int>;  // normalized: first < second

constexpr int kUnreachable = -1;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on dense vertex ids 0..n-1.
// No self-loops, no parallel edges; adjacency lists kept sorted.
class Graph {
 public:
  Graph() : n_(0) {}
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  // Induced subgraph on `keep`; returns the subgraph and the old-id list
  // indexed by new id.
  std::pair<Graph, std::vector<int>> induced(const std::vector<int>& keep) const;

 private:
  int n_;
  std::vector<Edge> edges_;             // sorted
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

// Simple digraph; arc (u,v) means u -> v.
class Digraph {
 public:
  Digraph() : n_(0) {}
  Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  bool has_arc(int u, int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> arcs_;  // sorted
  std::vector<std::vector<int>> out_, in_;
};

struct Components {
  std::vector<int> component_id;  // vertex -> component index, contiguous from 0
  int count = 0;
};

struct TwinPartition {
  enum class Kind { kTrueTwin, kFalseTwin };
  std::vector<std::vector<int>> classes;
  std::vector<Kind> kind;       // per class
  std::vector<int> class_of;    // vertex -> class index
};

// BFS distances in edge counts; kUnreachable marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);
std::vector<int> bfs_distances_out(const Digraph& d, int source);

// Max finite pairwise distance inside any component of g (or of the subgraph
// induced by `subset`). Empty graph and singletons give 0.
int diameter(const Graph& g, const std::optional<std::vector<int>>& subset = std::nullopt);

Components components(const Graph& g);
Components weak_components(const Digraph& d);

// Coarsest partition into maximal twin classes. A class is true-twin when all
// closed neighborhoods coincide, false-twin when the open ones do; isolated
// vertices are classified false-twin.
TwinPartition twin_partition(const Graph& g);

// g minus the given edges; every member must be an edge of g (throws otherwise).
Graph delete_edges(const Graph& g, const std::vector<Edge>& f);
Digraph delete_arcs(const Digraph& d, const std::vector<std::pair<int, int>>& f);

}  // namespace sclub
