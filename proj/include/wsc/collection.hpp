#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wsc/ground.hpp"

namespace wsc {

/// Duplicate-free list of subsets of one ground set, kept in ascending mask
/// order so that equality, hashing and serialization are canonical.
class Collection {
public:
  Collection() = default;
  /// Sorts and removes duplicates; throws InvalidInput on mixed ground sets.
  explicit Collection(std::vector<Subset> items);
  /// Empty collection on a known ground set.
  static Collection empty(int n);

  int n() const { return n_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const Subset> items() const { return items_; }
  const Subset& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const Subset& s) const;
  /// Index of s, or -1.
  std::ptrdiff_t index_of(const Subset& s) const;

  Collection with(const Subset& s) const;
  Collection without(const Subset& s) const;

  friend bool operator==(const Collection&, const Collection&) = default;
  friend auto operator<=>(const Collection& a, const Collection& b) {
    return a.items_ <=> b.items_;
  }

private:
  std::vector<Subset> items_;
  int n_ = 0;
};

bool is_subcollection(const Collection& a, const Collection& b);

/// Pairwise weakly separated.
bool is_weakly_separated(const Collection& c);
/// Every member of c is weakly separated from s.
bool is_weakly_separated_from(const Collection& c, const Subset& s);
bool is_chord_separated(const Collection& c);

}  // namespace wsc
