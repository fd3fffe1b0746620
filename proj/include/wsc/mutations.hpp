#pragma once

// Square moves on maximal weakly separated collections, exploration of the
// mutation graph and mutation distance.

#include <cstddef>
#include <optional>
#include <vector>

#include "wsc/collection.hpp"

namespace wsc {

/// S∪{a,c} -> S∪{b,d} with a, b, c, d cyclically ordered; enabled when
/// Sab, Sbc, Scd and Sda are present. Stored with a < c, so b ∈ (a, c) and
/// d lies outside [a, c].
struct SquareMove {
  Subset s;
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  Subset from;
  Subset to;

  /// The inverse move, relabelled so that its own a < c.
  SquareMove reversed() const;

  friend bool operator==(const SquareMove& x, const SquareMove& y) { return x.from == y.from && x.to == y.to; }
  /// Order by (from, to) masks.
  friend bool operator<(const SquareMove& x, const SquareMove& y);
};

/// Every applicable move, sorted. Throws ContractViolation unless c is a
/// maximal weakly separated collection of k-subsets.
std::vector<SquareMove> find_square_moves(const Collection& c);

/// c ∖ {from} ∪ {to}. Throws InvalidInput if the move is not enabled in c.
Collection apply_square_move(const Collection& c, const SquareMove& m);

/// Collections of k-subsets with k(n-k) above this need `allow_large`.
inline constexpr int kLargeGridArea = 12;

struct ExploreOptions {
  std::size_t budget = 1'000'000;
  /// Restrict to collections inside this domain: a move is taken only when
  /// its new set lies in the domain and is weakly separated from the rest.
  /// The seed then only needs to be weakly separated and inside the domain.
  std::optional<Collection> domain;
  bool keep_nodes = false;
};

struct MutationGraphSummary {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  /// False when the budget stopped the search before closure.
  bool complete = true;
  /// Discovery order; filled when `keep_nodes` is set.
  std::vector<Collection> nodes;
};

MutationGraphSummary explore_mutation_graph(const Collection& seed, const ExploreOptions& options = {});

struct DistanceOptions {
  std::size_t budget = 1'000'000;
  bool allow_large = false;
};

struct DistanceResult {
  /// Absent when the budget ran out first.
  std::optional<int> distance;
  /// Shortest path found among the explored nodes when the budget ran out.
  std::optional<int> upper_bound;
  std::vector<SquareMove> path;
  Collection source;
  Collection target;
  std::size_t nodes_explored = 0;

  bool budget_exhausted() const { return !distance.has_value(); }
};

/// Fewest square moves from a maximal collection containing I to one
/// containing J. The witness is the least (source, moves) pair among the
/// shortest. Throws InvalidInput for sizes that differ, and for k(n-k) above
/// kLargeGridArea unless `allow_large` is set.
DistanceResult mutation_distance(const Subset& i, const Subset& j, const DistanceOptions& options = {});

}  // namespace wsc
