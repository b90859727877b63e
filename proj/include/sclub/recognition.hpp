#pragma once

#include <optional>
#include <vector>

#include "sclub/instance.hpp"

namespace sclub {

struct SplitPartition {
  std::vector<int> clique_side;       // C
  std::vector<int> independent_side;  // I
};

struct CliquePath {
  enum class BagKind { kIntroduce, kForget, kEmptyTerminal };
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<BagKind> kind;
};

struct UnitOrder {
  std::vector<int> order;  // permutation of V; closed neighborhoods consecutive
};

// Degree-sequence split test (Hammer–Simeone). Returns nullopt when g is not
// a split graph.
std::optional<SplitPartition> recognize_split(const Graph& g);

// Left-to-right sweep over an interval model: maximal cliques, then the
// alternating introduce/forget normalization ending in an empty bag. When no
// model is given, one is computed by polynomial recognition (proper-interval
// 3-sweep LBFS, falling back to chordality + clique arrangement); nullopt when
// recognition fails or the supplied model is inconsistent is an error.
std::optional<CliquePath> clique_path(const Graph& g,
                                      const std::optional<IntervalModel>& model = std::nullopt);

// Canonical proper-interval order via 3-sweep LBFS+, certified by the
// consecutive closed-neighborhood check.
std::optional<UnitOrder> unit_order(const Graph& g);

// Builds an interval model from g if possible (unit-order route first, then
// chordal clique-path arrangement).
std::optional<IntervalModel> compute_interval_model(const Graph& g);

struct CycleBoundResult {
  enum class Status { kHolds, kViolated, kUnknown };
  Status status = Status::kHolds;
  std::vector<int> witness_cycle;  // set when violated
  bool holds() const { return status == Status::kHolds; }
};

// Certifies "no induced cycle of length >= t" (t >= 4). t = 4 uses a perfect
// elimination ordering; t > 4 runs a budgeted induced-cycle search. Budget
// exhaustion reports kUnknown, which callers must treat as violated.
CycleBoundResult max_induced_cycle_bound(const Graph& g, int t,
                                         long long node_budget = 2'000'000);

// Independent re-checkers, used by tests; deliberately naive.
bool check_split_partition(const Graph& g, const SplitPartition& sp);
bool check_interval_model(const Graph& g, const IntervalModel& model);
bool check_clique_path(const Graph& g, const CliquePath& cp);
bool check_unit_order(const Graph& g, const UnitOrder& uo);

// Maximal cliques in left-to-right order of an interval model.
std::vector<std::vector<int>> maximal_cliques_of_model(const Graph& g, const IntervalModel& model);

// Lemma-style normalization: merge consecutive same-kind bags and append
// forget bags so the final bag is empty.
CliquePath normalize_clique_path(const std::vector<std::vector<int>>& maximal_cliques);

// Perfect elimination ordering via maximum cardinality search; nullopt when
// g is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);

}  // namespace sclub
