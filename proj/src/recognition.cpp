#include "sclub/recognition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sclub {

namespace {

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// LBFS with ties broken toward the vertex appearing latest in `prior`.
std::vector<int> lbfs_plus(const Graph& g, const std::vector<int>& prior) {
  int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[prior[i]] = i;
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best == -1 || label[v] > label[best] ||
          (label[v] == label[best] && pos[v] > pos[best]))
        best = v;
    }
    done[best] = true;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!done[u]) label[u].push_back(n - step);  // decreasing marks keep labels lexicographic
  }
  return order;
}

bool neighborhoods_consecutive(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    int lo = pos[v], hi = pos[v], cnt = 1;
    for (int u : g.neighbors(v)) {
      lo = std::min(lo, pos[u]);
      hi = std::max(hi, pos[u]);
      ++cnt;
    }
    if (hi - lo + 1 != cnt) return false;
  }
  return true;
}

// Orders maximal cliques so that the cliques containing any vertex are
// consecutive; backtracking with open/closed pruning, budgeted.
std::optional<std::vector<int>> arrange_cliques_consecutively(
    int n, const std::vector<std::vector<int>>& cliques, long long budget = 500'000) {
  int t = static_cast<int>(cliques.size());
  std::vector<int> count(n, 0);
  for (const auto& q : cliques)
    for (int v : q) ++count[v];
  std::vector<int> seen(n, 0);
  std::vector<bool> closed(n, false), used(t, false);
  std::vector<int> perm;
  long long nodes = 0;
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(perm.size()) == t) return true;
    if (++nodes > budget) return false;
    for (int q = 0; q < t; ++q) {
      if (used[q]) continue;
      bool ok = true;
      for (int v : cliques[q])
        if (closed[v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // A vertex open in the previous clique but absent here would be split.
      if (!perm.empty()) {
        for (int v : cliques[perm.back()])
          if (seen[v] < count[v] &&
              !std::binary_search(cliques[q].begin(), cliques[q].end(), v)) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      used[q] = true;
      perm.push_back(q);
      std::vector<int> newly_closed;
      for (int v : cliques[q]) {
        ++seen[v];
        if (seen[v] == count[v]) {
          closed[v] = true;
          newly_closed.push_back(v);
        }
      }
      if (rec()) return true;
      for (int v : newly_closed) closed[v] = false;
      for (int v : cliques[q]) --seen[v];
      perm.pop_back();
      used[q] = false;
      if (nodes > budget) return false;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return perm;
}

}  // namespace

std::optional<SplitPartition> recognize_split(const Graph& g) {
  int n = g.n();
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  long long sum_top = 0, sum_rest = 0;
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(vs[i]) >= i) m = i + 1;
  for (int i = 0; i < n; ++i)
    (i < m ? sum_top : sum_rest) += g.degree(vs[i]);
  if (sum_top != static_cast<long long>(m) * (m - 1) + sum_rest) return std::nullopt;
  SplitPartition sp;
  sp.clique_side.assign(vs.begin(), vs.begin() + m);
  sp.independent_side.assign(vs.begin() + m, vs.end());
  std::sort(sp.clique_side.begin(), sp.clique_side.end());
  std::sort(sp.independent_side.begin(), sp.independent_side.end());
  if (!check_split_partition(g, sp)) return std::nullopt;
  return sp;
}

bool check_split_partition(const Graph& g, const SplitPartition& sp) {
  if (sp.clique_side.size() + sp.independent_side.size() != static_cast<size_t>(g.n()))
    return false;
  std::vector<bool> in_c(g.n(), false), seen(g.n(), false);
  for (int v : sp.clique_side) {
    if (seen[v]) return false;
    seen[v] = in_c[v] = true;
  }
  for (int v : sp.independent_side) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return is_clique(g, sp.clique_side) && is_independent(g, sp.independent_side);
}

bool check_interval_model(const Graph& g, const IntervalModel& model) {
  if (model.range.size() != static_cast<size_t>(g.n())) return false;
  for (int u = 0; u < g.n(); ++u) {
    if (model.range[u].first > model.range[u].second) return false;
    for (int v = u + 1; v < g.n(); ++v) {
      bool meet = model.range[u].first <= model.range[v].second &&
                  model.range[v].first <= model.range[u].second;
      if (meet != g.has_edge(u, v)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> maximal_cliques_of_model(const Graph& g,
                                                       const IntervalModel& model) {
  int n = g.n();
  // Snapshot the active set at every right endpoint, then drop non-maximal
  // snapshots keeping left-to-right order.
  std::vector<int> by_right(n);
  std::iota(by_right.begin(), by_right.end(), 0);
  std::sort(by_right.begin(), by_right.end(), [&](int a, int b) {
    return model.range[a].second != model.range[b].second
               ? model.range[a].second < model.range[b].second
               : a < b;
  });
  std::vector<std::vector<int>> snaps;
  for (int v : by_right) {
    long long p = model.range[v].second;
    std::vector<int> active;
    for (int u = 0; u < n; ++u)
      if (model.range[u].first <= p && p <= model.range[u].second) active.push_back(u);
    snaps.push_back(std::move(active));
  }
  std::vector<std::vector<int>> cliques;
  for (size_t i = 0; i < snaps.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < snaps.size() && maximal; ++j) {
      if (i == j || snaps[i].size() > snaps[j].size()) continue;
      if (i < j && snaps[i] == snaps[j]) maximal = false;  // keep the later duplicate
      else if (snaps[i].size() < snaps[j].size() &&
               std::includes(snaps[j].begin(), snaps[j].end(), snaps[i].begin(), snaps[i].end()))
        maximal = false;
    }
    if (maximal && (cliques.empty() || cliques.back() != snaps[i])) cliques.push_back(snaps[i]);
  }
  return cliques;
}

CliquePath normalize_clique_path(const std::vector<std::vector<int>>& maximal_cliques) {
  CliquePath cp;
  // Interleave introduce bags (the cliques) with forget bags (consecutive
  // intersections); then merge same-kind neighbors and close with the empty
  // terminal bag.
  std::vector<std::vector<int>> bags;
  std::vector<CliquePath::BagKind> kinds;
  for (size_t i = 0; i < maximal_cliques.size(); ++i) {
    bags.push_back(maximal_cliques[i]);
    kinds.push_back(CliquePath::BagKind::kIntroduce);
    if (i + 1 < maximal_cliques.size()) {
      std::vector<int> inter;
      std::set_intersection(maximal_cliques[i].begin(), maximal_cliques[i].end(),
                            maximal_cliques[i + 1].begin(), maximal_cliques[i + 1].end(),
                            std::back_inserter(inter));
      bags.push_back(std::move(inter));
      kinds.push_back(CliquePath::BagKind::kForget);
    }
  }
  // Merge runs of equal kind (an introduce bag followed by a superset, or a
  // forget bag followed by a subset).
  for (size_t i = 0; i < bags.size(); ++i) {
    if (!cp.bags.empty() && cp.kind.back() == kinds[i]) {
      if (kinds[i] == CliquePath::BagKind::kIntroduce) {
        std::vector<int> merged;
        std::set_union(cp.bags.back().begin(), cp.bags.back().end(), bags[i].begin(),
                       bags[i].end(), std::back_inserter(merged));
        cp.bags.back() = std::move(merged);
      } else {
        cp.bags.back() = bags[i];
      }
    } else {
      cp.bags.push_back(bags[i]);
      cp.kind.push_back(kinds[i]);
    }
  }
  if (cp.bags.empty() || !cp.bags.back().empty()) {
    cp.bags.push_back({});
    cp.kind.push_back(CliquePath::BagKind::kEmptyTerminal);
  } else {
    cp.kind.back() = CliquePath::BagKind::kEmptyTerminal;
  }
  return cp;
}

bool check_clique_path(const Graph& g, const CliquePath& cp) {
  if (cp.bags.empty() || !cp.bags.back().empty()) return false;
  if (cp.kind.back() != CliquePath::BagKind::kEmptyTerminal) return false;
  std::vector<int> first(g.n(), -1), last(g.n(), -1);
  for (size_t i = 0; i < cp.bags.size(); ++i) {
    if (!is_clique(g, cp.bags[i])) return false;
    for (int v : cp.bags[i]) {
      if (first[v] == -1) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (first[v] == -1) return false;  // every vertex appears
    for (int i = first[v]; i <= last[v]; ++i)
      if (!std::binary_search(cp.bags[i].begin(), cp.bags[i].end(), v)) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : cp.bags)
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  // Strict alternation: each bag strictly introduces or strictly forgets
  // relative to the previous one, and the kinds flip at every step (the empty
  // terminal counts as a forget).
  auto is_intro = [&](size_t i) { return cp.kind[i] == CliquePath::BagKind::kIntroduce; };
  for (size_t i = 0; i + 1 < cp.bags.size(); ++i) {
    if (is_intro(i) == is_intro(i + 1)) return false;
    const auto& a = cp.bags[i];
    const auto& b = cp.bags[i + 1];
    if (is_intro(i + 1)) {
      if (a.size() >= b.size() || !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return false;
    } else {
      if (b.size() >= a.size() || !std::includes(a.begin(), a.end(), b.begin(), b.end()))
        return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  int n = g.n();
  // Maximum cardinality search, numbered n-1 down to 0.
  std::vector<int> weight(n, 0), number(n, -1), order(n);
  for (int step = n - 1; step >= 0; --step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (number[v] == -1 && (best == -1 || weight[v] > weight[best])) best = v;
    number[best] = step;
    order[step] = best;
    for (int u : g.neighbors(best))
      if (number[u] == -1) ++weight[u];
  }
  // order is a candidate PEO; verify it.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int parent = -1;
    std::vector<int> later;
    for (int u : g.neighbors(v))
      if (pos[u] > i) {
        later.push_back(u);
        if (parent == -1 || pos[u] < pos[parent]) parent = u;
      }
    for (int u : later)
      if (u != parent && !g.has_edge(parent, u)) return std::nullopt;
  }
  return order;
}

std::optional<UnitOrder> unit_order(const Graph& g) {
  int n = g.n();
  if (n == 0) return UnitOrder{};
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  auto s1 = lbfs_plus(g, ident);
  auto s2 = lbfs_plus(g, s1);
  auto s3 = lbfs_plus(g, s2);
  if (neighborhoods_consecutive(g, s3)) return UnitOrder{s3};
  return std::nullopt;
}

bool check_unit_order(const Graph& g, const UnitOrder& uo) {
  if (uo.order.size() != static_cast<size_t>(g.n())) return false;
  std::vector<bool> seen(g.n(), false);
  for (int v : uo.order) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = true;
  }
  return neighborhoods_consecutive(g, uo.order);
}

std::optional<IntervalModel> compute_interval_model(const Graph& g) {
  // Proper-interval route: intervals [i, max neighbor position].
  if (auto uo = unit_order(g)) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[uo->order[i]] = i;
    IntervalModel model;
    model.range.resize(n);
    for (int v = 0; v < n; ++v) {
      int hi = pos[v];
      for (int u : g.neighbors(v)) hi = std::max(hi, pos[u]);
      model.range[v] = {pos[v], hi};
    }
    if (check_interval_model(g, model)) return model;
  }
  // General interval route: chordality, maximal cliques, consecutive
  // arrangement, then interval = clique index range.
  auto peo = perfect_elimination_ordering(g);
  if (!peo) return std::nullopt;
  int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
  std::vector<std::vector<int>> cand;
  for (int i = 0; i < n; ++i) {
    int v = (*peo)[i];
    std::vector<int> c{v};
    for (int u : g.neighbors(v))
      if (pos[u] > i) c.push_back(u);
    std::sort(c.begin(), c.end());
    cand.push_back(std::move(c));
  }
  std::vector<std::vector<int>> cliques;
  for (size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cand.size() && maximal; ++j) {
      if (i == j) continue;
      if (cand[i] == cand[j] && i > j) maximal = false;
      else if (cand[i] != cand[j] &&
               std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end()))
        maximal = false;
    }
    if (maximal) cliques.push_back(cand[i]);
  }
  auto perm = arrange_cliques_consecutively(n, cliques);
  if (!perm) return std::nullopt;
  IntervalModel model;
  model.range.assign(n, {-1, -1});
  for (size_t i = 0; i < perm->size(); ++i)
    for (int v : cliques[(*perm)[i]]) {
      if (model.range[v].first == -1) model.range[v].first = static_cast<long long>(i);
      model.range[v].second = static_cast<long long>(i);
    }
  if (!check_interval_model(g, model)) return std::nullopt;
  return model;
}

std::optional<CliquePath> clique_path(const Graph& g, const std::optional<IntervalModel>& model) {
  IntervalModel m;
  if (model) {
    if (!check_interval_model(g, *model))
      throw std::invalid_argument("clique_path: supplied model inconsistent with graph");
    m = *model;
  } else {
    auto computed = compute_interval_model(g);
    if (!computed) return std::nullopt;
    m = *computed;
  }
  if (g.n() == 0) return normalize_clique_path({});
  return normalize_clique_path(maximal_cliques_of_model(g, m));
}

CycleBoundResult max_induced_cycle_bound(const Graph& g, int t, long long node_budget) {
  if (t < 4) throw std::invalid_argument("max_induced_cycle_bound: t must be >= 4");
  CycleBoundResult res;
  if (t == 4 && perfect_elimination_ordering(g)) return res;  // chordal, holds
  // Search for an induced cycle of length >= t: enumerate induced paths whose
  // smallest vertex comes first and whose second vertex id is below the last
  // vertex id (kills reflections).
  long long nodes = 0;
  std::vector<int> path;
  std::vector<bool> on_path(g.n(), false);
  std::function<bool(int)> extend = [&](int root) -> bool {
    if (++nodes > node_budget) return false;
    int last = path.back();
    if (static_cast<int>(path.size()) >= t && g.has_edge(last, root) && path[1] < last) {
      res.status = CycleBoundResult::Status::kViolated;
      res.witness_cycle = path;
      return true;
    }
    for (int u : g.neighbors(last)) {
      if (u <= root || on_path[u]) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (g.has_edge(path[i], u) && !(i == 0 && static_cast<int>(path.size() + 1) >= t)) {
          // adjacency back to the root is allowed only as the closing edge
          chord = true;
          break;
        }
      if (chord) continue;
      bool root_adj = g.has_edge(u, root);
      if (root_adj && static_cast<int>(path.size() + 1) < t) continue;  // would close short
      path.push_back(u);
      on_path[u] = true;
      if (extend(root)) return true;
      on_path[u] = false;
      path.pop_back();
      if (nodes > node_budget) return false;
    }
    return false;
  };
  for (int root = 0; root < g.n(); ++root) {
    path = {root};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[root] = true;
    if (extend(root)) return res;
    if (nodes > node_budget) {
      res.status = CycleBoundResult::Status::kUnknown;
      return res;
    }
  }
  return res;
}

}  // namespace sclub
