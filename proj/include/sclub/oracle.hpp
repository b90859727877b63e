#pragma once

#include <optional>

#include "sclub/instance.hpp"

namespace sclub {

struct OracleResult {
  // Empty when no solution exists within budget k.
  std::optional<long long> opt;       // minimum |F| (or total weight for opt_weighted)
  DeletionSet witness;                // valid only when opt is set
  bool solved() const { return opt.has_value(); }
};

// Brute force by increasing |F|, lexicographic edge order within a size;
// first feasible subset wins, so witnesses are deterministic.
OracleResult opt_undirected(const Instance& inst);
OracleResult opt_directed(const Instance& inst);

// Minimum total edge weight subject to sum <= k; weights >= 1 bound |F| <= k.
OracleResult opt_weighted(const Instance& inst);

// Independent second strategy: enumerate vertex partitions into blocks,
// F := crossing edges, feasible iff every block's induced diameter is <= s.
// Intended for n <= 10.
OracleResult opt_undirected_by_partitions(const Instance& inst);

}  // namespace sclub
