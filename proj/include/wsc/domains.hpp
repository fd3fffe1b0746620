#pragma once

// Domains A_{I,J}, boundary intervals, the LR domain, circle partitions of
// complementary pairs and the rank / distance formulas built on them.

#include <optional>
#include <vector>

#include "wsc/cliques.hpp"
#include "wsc/collection.hpp"

namespace wsc {

/// Alternating runs of A and its complement around the circle [2k], after
/// rotating A so that 1 is in A and 2k is not. Odd intervals (1-based
/// P1, P3, ...) lie in the rotated A.
struct CirclePartition {
  int k = 0;
  int u = 0;
  /// Rotation applied to A: rotated = rotate(A, offset).
  int offset = 0;
  /// P1..P_{2u} in rotated coordinates, stored 0-based.
  std::vector<Subset> intervals;
  std::vector<int> lengths;

  /// 1-based index of the interval holding a rotated element.
  int interval_index(int rotated_element) const;
  /// First (rotated) element of interval `index` (1-based).
  int interval_start(int index) const;
};

CirclePartition circle_partition(const Subset& a);

/// p_i + p_j < k for every pair of distinct intervals.
bool is_balanced(const CirclePartition& p);
bool is_balanced(const Subset& a);

/// Sum of C(p, 2) over the lengths.
int sum_pairs(const std::vector<int>& lengths);

/// A pair I, J of equal size reduced to the complementary pair on [2k]
/// obtained by deleting I ∩ J and the common complement.
struct PairContext {
  Subset i;
  Subset j;
  int m = 0;
  int k = 0;
  /// I △ J ascending; proj(support[t]) = t + 1.
  std::vector<int> support;
  Subset reduced_i;
  Subset reduced_j;
  /// Absent when k = 0.
  std::optional<CirclePartition> partition;
  bool balanced = false;

  bool degenerate() const { return k == 0; }
  /// Position of x in [2k], or 0 when x is not in I △ J.
  int proj(int x) const;
  /// Interval index (1-based, partition order) containing proj(x).
  int interval_of(int x) const;
};

PairContext reduce_pair(const Subset& i, const Subset& j);

Collection boundary_intervals(int k, int n);

/// All |I|-subsets weakly separated from both I and J.
Collection build_domain_AIJ(const Subset& i, const Subset& j);

/// m(n-m) - k^2 + 2k + sum C(p_i, 2). Throws ContractViolation for an
/// unbalanced or degenerate pair.
int rank_formula(const PairContext& ctx);

enum class DistanceMethod { exact, formula };

DistanceMethod parse_distance_method(std::string_view text);

struct ClusterDistance {
  int value = 0;
  /// Set when the formula was evaluated on an unbalanced pair and only
  /// bounds the distance from above.
  bool upper_bound = false;
};

ClusterDistance cluster_distance(const Subset& i, const Subset& j, DistanceMethod method);

/// Closed form 1 + k^2 - 2k - sum C(p_i, 2) on the reduced pair (0 when k = 0).
int distance_formula(const PairContext& ctx);

// LR domain on [0, n], stored on [n + 1] via x -> x + 1.

/// Internal subset for 0-based LR labels.
Subset lr_subset(const std::vector<int>& labels, int n);
/// 0-based LR labels of an internal subset.
std::vector<int> lr_labels(const Subset& s);
/// Subsets of [0, n] containing exactly one of 0 and n.
Collection lr_domain(int n);

struct LRChain {
  /// S_0 ⊂ ... ⊂ S_{n-1}, internal encoding (never contain 0 or n).
  std::vector<Subset> sets;
};

/// Throws InvalidInput if W is not a maximal weakly separated collection in
/// lr_domain(n), TheoremViolation if some level has no or several S_m, or
/// the sets fail to nest.
LRChain lr_chain(const Collection& w, int n);

/// Lower-bound construction for unbalanced complementary pairs.
struct UnbalancedBound {
  CirclePartition partition;
  std::vector<int> a;
  std::vector<int> b;
  /// chi[i][j], 0-based indices into a and b.
  std::vector<std::vector<int>> chi;
  int bound = 0;
  /// Generated sets before duplicates were merged.
  int generated = 0;
  /// Union of the generated sets in A's original coordinates.
  Collection witness;

  bool witness_matches_bound() const { return static_cast<int>(witness.size()) == bound; }
};

UnbalancedBound unbalanced_witness(const Subset& a);

/// Cyclically ordered alpha < beta <= gamma < delta <= alpha with the four
/// regional conditions, plus endpoint and internal intervals of proj R.
struct ElementProfile {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  /// Interval holding proj (gamma, delta); absent when that region misses I △ J.
  std::optional<int> left_endpoint;
  /// Interval holding proj (alpha, beta).
  std::optional<int> right_endpoint;
  /// Other intervals contained in proj R.
  std::vector<int> internal;
};

/// Checks the regional conditions and single-interval projections for one
/// tuple. Requires a non-degenerate context.
bool profile_is_valid(const PairContext& ctx, const Subset& r, int alpha, int beta, int gamma, int delta);

/// Lexicographically least valid (alpha, beta, gamma, delta). Throws
/// ContractViolation for unbalanced contexts, InvalidInput if R is not in
/// A_{I,J}, TheoremViolation if no tuple exists.
ElementProfile characterize_element(const PairContext& ctx, const Subset& r);

/// Nested S_|U| ⊂ ... ⊂ S_|V| between U and V with S, 1∪S, S∪n, 1∪S∪n in W,
/// for W maximal chord separated in 2^[n].
std::vector<Subset> chord_chain(const Collection& w, const Subset& u, const Subset& v);

/// Runs chord_chain on every pair U ⊊ V of W that meets its conditions and
/// returns how many there were.
int check_chord_chains(const Collection& w);

}  // namespace wsc
