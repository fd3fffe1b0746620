#pragma once

// Decorated permutations, Grassmann necklaces, positroid membership and the
// in/out split of simple cyclic patterns.

#include <map>
#include <vector>

#include "wsc/collection.hpp"
#include "wsc/domains.hpp"

namespace wsc {

class DecoratedPermutation {
public:
  DecoratedPermutation() = default;
  /// One-line notation, values 1..n. Colours (+1 / -1) must be given for
  /// exactly the fixed points; throws InvalidInput otherwise.
  explicit DecoratedPermutation(std::vector<int> one_line, std::map<int, int> colors = {});

  int n() const { return static_cast<int>(perm_.size()); }
  int operator()(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }
  int inverse(int j) const { return inv_[static_cast<std::size_t>(j - 1)]; }
  bool is_fixed(int i) const { return (*this)(i) == i; }
  const std::vector<int>& one_line() const { return perm_; }
  const std::map<int, int>& colors() const { return colors_; }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;

private:
  std::vector<int> perm_;
  std::vector<int> inv_;
  std::map<int, int> colors_;
};

/// (sigma ∘ pi)(i) = sigma(pi(i)); both must be fixed-point free or the
/// result's fixed points are coloured +1.
DecoratedPermutation compose(const DecoratedPermutation& sigma, const DecoratedPermutation& pi);

/// i -> i + k (mod n). For k = 0 every point is fixed with colour +1, for
/// k = n with colour -1.
DecoratedPermutation tau_kn(int k, int n);

/// The block reversal of A's circle partition and its composition with
/// tau_{k,2k}. Both live in the partition's rotated coordinates.
struct CanonicalPermutation {
  CirclePartition partition;
  DecoratedPermutation block_reversal;
  DecoratedPermutation composed;
};

CanonicalPermutation canonical_permutation(const Subset& a);

struct PermutationLength {
  int alignments = 0;
  int length = 0;
};

PermutationLength length_of(const DecoratedPermutation& p, int k);

class GrassmannNecklace {
public:
  GrassmannNecklace() = default;
  /// Validates equal sizes and the one-step exchange rule between
  /// consecutive sets (cyclically); throws InvalidInput otherwise.
  explicit GrassmannNecklace(std::vector<Subset> sets);

  int n() const { return static_cast<int>(sets_.size()); }
  int k() const { return sets_.front().size(); }
  /// I_i, 1-based, cyclic.
  const Subset& operator[](int i) const { return sets_[static_cast<std::size_t>((i - 1) % n())]; }
  const std::vector<Subset>& sets() const { return sets_; }
  /// All I_i pairwise distinct.
  bool connected() const;

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;

private:
  std::vector<Subset> sets_;
};

/// I_i = { j : j <_i pi^-1(j) } ∪ { fixed points coloured -1 }. Throws
/// InvalidInput when the sets do not have size k.
GrassmannNecklace necklace_from_perm(const DecoratedPermutation& p, int k);
DecoratedPermutation perm_from_necklace(const GrassmannNecklace& nk);

/// I_i ≼_i J for every i.
bool positroid_contains(const GrassmannNecklace& nk, const Subset& j);

/// k-subsets weakly separated from every I_i and inside the positroid.
Collection domain_in_for_necklace(const GrassmannNecklace& nk);

/// Weakly separated, pairwise distinct, consecutive sets differ in one element.
bool is_simple_cyclic_pattern(const std::vector<Subset>& sets);
/// Same size, weakly separated, pairwise distinct, consecutive sets differ
/// by one exchange.
bool is_generalized_cyclic_pattern(const std::vector<Subset>& sets);

struct PatternSplit {
  Collection d_in;
  Collection d_out;
};

/// Split of every subset weakly separated from the pattern by the parity of
/// slopes of its size that lie below it in the Gale order ≼_1. The pattern
/// may be given with or without its closing repeat S_r = S_0.
PatternSplit simple_pattern_split(std::vector<Subset> pattern);

}  // namespace wsc
