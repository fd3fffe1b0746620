#pragma once

// Subsets of the cyclic ground set [n] = {1, ..., n}, n <= 64, and the
// order / separation predicates every other module is built on.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsc/error.hpp"

namespace wsc {

inline constexpr int kMaxGround = 64;

/// Bitmask with bits 0..n-1 set.
constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of [n]; bit i-1 of the mask stands for element i.
class Subset {
public:
  constexpr Subset() = default;

  /// Throws InvalidInput if n is out of range or the mask has bits at or above n.
  Subset(std::uint64_t mask, int n);

  static Subset empty(int n) { return Subset(0, n); }
  static Subset full(int n) { return Subset(full_mask(n), n); }
  /// From 1-based elements; throws InvalidInput on elements outside [n].
  static Subset of(std::initializer_list<int> elements, int n);
  static Subset of(const std::vector<int>& elements, int n);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int n() const { return n_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }

  bool contains(int element) const {
    return element >= 1 && element <= n_ && ((mask_ >> (element - 1)) & 1U);
  }

  /// Ascending 1-based elements.
  std::vector<int> elements() const;
  /// Smallest / largest element; the set must be non-empty.
  int min() const { return std::countr_zero(mask_) + 1; }
  int max() const { return 64 - std::countl_zero(mask_); }

  Subset with(int element) const;
  Subset without(int element) const;

  friend constexpr bool operator==(const Subset&, const Subset&) = default;
  /// Canonical order: by ground size, then by mask value.
  friend constexpr auto operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

/// Throws InvalidInput unless a and b live on the same ground set.
void require_same_ground(const Subset& a, const Subset& b);

// Set algebra on a common ground set (mismatched n throws).
Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
Subset symmetric_difference(const Subset& a, const Subset& b);
bool is_subset_of(const Subset& a, const Subset& b);

/// The linear order <_i on [n]: i < i+1 < ... < n < 1 < ... < i-1.
struct CyclicOrder {
  int base = 1;

  /// Rank of x in <_base, 0-based.
  int position(int x, int n) const { return ((x - base) % n + n) % n; }
};

/// {a, a+1, ..., b} modulo n.
Subset cyclic_interval(int a, int b, int n);

/// True for cyclic intervals, and for the empty and full sets.
bool is_cyclic_interval(const Subset& s);

/// I \ J splits as I1 ⊔ I2 with I1 < J \ I < I2 (empty comparisons hold).
bool surrounds(const Subset& i, const Subset& j);

bool is_weakly_separated(const Subset& s, const Subset& t);

/// No cyclically ordered a, b, c, d with a, c in S \ T and b, d in T \ S.
bool is_chord_separated(const Subset& s, const Subset& t);

/// Gale order A ≼_i B under the cyclic order `order`.
bool gale_leq(const Subset& a, const Subset& b, CyclicOrder order = {});

Subset complement(const Subset& s);
/// x -> ((x - 1 + r) mod n) + 1; r may be negative.
Subset rotate(const Subset& s, int r);

/// True iff a, b, c, d are distinct and met in this order walking
/// clockwise from a.
bool cyclically_ordered(int a, int b, int c, int d, int n);

/// Parses "1,2,4" (whitespace tolerated, empty string is the empty set).
Subset parse_subset(std::string_view text, int n);
/// "1,2,4".
std::string format_subset(const Subset& s);

/// All k-subsets of [n] in ascending mask order.
std::vector<Subset> k_subsets(int n, int k);
/// All 2^n subsets of [n] in ascending mask order (n <= 24).
std::vector<Subset> all_subsets(int n);

}  // namespace wsc
