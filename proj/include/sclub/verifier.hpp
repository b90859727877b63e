#pragma once

#include <optional>

#include "sclub/instance.hpp"

namespace sclub {

struct Witness {
  int u = -1, v = -1;
  int distance = kUnreachable;     // distance in the residual graph, kUnreachable if budget excess
  bool budget_excess = false;
  long long total_weight = 0;
};

struct VerifyResult {
  bool feasible = false;
  std::optional<Witness> witness;  // set when infeasible
};

// Feasible iff total weight of f is at most k and every component of G-F has
// diameter at most s. Recomputes everything from scratch.
VerifyResult verify_undirected(const Instance& inst, const DeletionSet& f);

// Directed variant: every weak component C of D-F must be s-reach-bounded
// (v reachable from u inside C implies dist_C(u,v) <= s).
VerifyResult verify_directed(const Instance& inst, const DeletionSet& f);

struct GrowthCheck {
  bool holds = true;
  int u = -1, v = -1;
  int before = 0, after = 0;
};

// For all pairs still connected in G-F, asserts
//   dist_{G-F}(u,v) <= dist_G(u,v) + |f| * (t-3).
// Caller certifies that g has no induced cycle of length >= t.
GrowthCheck distance_growth_check(const Graph& g, const DeletionSet& f, int t);

}  // namespace sclub
