#include "wsc/necklaces.hpp"

#include <algorithm>
#include <string>

namespace wsc {

DecoratedPermutation::DecoratedPermutation(std::vector<int> one_line, std::map<int, int> colors)
    : perm_(std::move(one_line)), colors_(std::move(colors)) {
  const int n = static_cast<int>(perm_.size());
  if (n < 1 || n > kMaxGround) throw InvalidInput("permutation size must be in [1, 64]");
  inv_.assign(perm_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = perm_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || inv_[static_cast<std::size_t>(v - 1)] != 0) {
      throw InvalidInput("one-line notation is not a permutation of [" + std::to_string(n) + "]");
    }
    inv_[static_cast<std::size_t>(v - 1)] = i;
  }
  for (const auto& [point, colour] : colors_) {
    if (point < 1 || point > n || perm_[static_cast<std::size_t>(point - 1)] != point) {
      throw InvalidInput("colour given for " + std::to_string(point) + ", which is not a fixed point");
    }
    if (colour != 1 && colour != -1) throw InvalidInput("fixed-point colours must be +1 or -1");
  }
  for (int i = 1; i <= n; ++i) {
    if (perm_[static_cast<std::size_t>(i - 1)] == i && !colors_.count(i)) {
      throw InvalidInput("fixed point " + std::to_string(i) + " has no colour");
    }
  }
}

DecoratedPermutation compose(const DecoratedPermutation& sigma, const DecoratedPermutation& pi) {
  if (sigma.n() != pi.n()) throw InvalidInput("composing permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(pi.n()));
  std::map<int, int> colors;
  for (int i = 1; i <= pi.n(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = sigma(pi(i));
    if (sigma(pi(i)) == i) colors[i] = 1;
  }
  return DecoratedPermutation(std::move(out), std::move(colors));
}

DecoratedPermutation tau_kn(int k, int n) {
  if (k < 0 || k > n) throw InvalidInput("tau_{k,n} needs 0 <= k <= n");
  std::vector<int> out(static_cast<std::size_t>(n));
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(i - 1)] = (i - 1 + k) % n + 1;
    if (k == 0) colors[i] = 1;
    if (k == n) colors[i] = -1;
  }
  return DecoratedPermutation(std::move(out), std::move(colors));
}

CanonicalPermutation canonical_permutation(const Subset& a) {
  CanonicalPermutation c;
  c.partition = circle_partition(a);
  const int n = 2 * c.partition.k;
  std::vector<int> reversal(static_cast<std::size_t>(n));
  for (int idx = 1; idx <= 2 * c.partition.u; ++idx) {
    const int s = c.partition.interval_start(idx);
    const int p = c.partition.lengths[idx - 1];
    for (int t = 0; t < p; ++t) reversal[static_cast<std::size_t>(s + t - 1)] = s + p - 1 - t;
  }
  c.block_reversal = DecoratedPermutation(reversal, [&] {
    std::map<int, int> colors;
    for (int i = 1; i <= n; ++i) {
      if (reversal[static_cast<std::size_t>(i - 1)] == i) colors[i] = 1;
    }
    return colors;
  }());
  c.composed = compose(c.block_reversal, tau_kn(c.partition.k, n));
  return c;
}

PermutationLength length_of(const DecoratedPermutation& p, int k) {
  const int n = p.n();
  if (k < 0 || k > n) throw InvalidInput("length needs 0 <= k <= n");
  PermutationLength out;
  // Ordered pairs: (i, j) and (j, i) cannot both be cyclically ordered, so
  // each alignment is counted once.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && cyclically_ordered(i, p(i), p(j), j, n)) ++out.alignments;
    }
  }
  out.length = k * (n - k) - out.alignments;
  return out;
}

GrassmannNecklace::GrassmannNecklace(std::vector<Subset> sets) : sets_(std::move(sets)) {
  const int n = static_cast<int>(sets_.size());
  if (n < 1) throw InvalidInput("a necklace needs at least one set");
  for (const Subset& s : sets_) {
    if (s.n() != n) throw InvalidInput("necklace sets must be subsets of [n] with n = number of sets");
    if (s.size() != sets_.front().size()) throw InvalidInput("necklace sets must all have the same size");
  }
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = sets_[static_cast<std::size_t>(i - 1)];
    const Subset& next = sets_[static_cast<std::size_t>(i % n)];
    if (!cur.contains(i)) {
      if (next != cur) throw InvalidInput("necklace step " + std::to_string(i) + " changes a set not containing i");
      continue;
    }
    const Subset rest = cur.without(i);
    if (!is_subset_of(rest, next)) {
      throw InvalidInput("necklace step " + std::to_string(i) + " is not of the form I \\ {i} ∪ {j}");
    }
  }
}

bool GrassmannNecklace::connected() const {
  std::vector<Subset> sorted = sets_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GrassmannNecklace necklace_from_perm(const DecoratedPermutation& p, int k) {
  const int n = p.n();
  std::vector<Subset> sets;
  for (int i = 1; i <= n; ++i) {
    const CyclicOrder order{i};
    std::uint64_t mask = 0;
    for (int j = 1; j <= n; ++j) {
      const bool below = order.position(j, n) < order.position(p.inverse(j), n);
      const bool dark_fixed = p.is_fixed(j) && p.colors().at(j) == -1;
      if (below || dark_fixed) mask |= std::uint64_t{1} << (j - 1);
    }
    Subset s(mask, n);
    if (s.size() != k) {
      throw InvalidInput("permutation gives necklace sets of size " + std::to_string(s.size()) + ", not k = " +
                         std::to_string(k));
    }
    sets.push_back(s);
  }
  return GrassmannNecklace(std::move(sets));
}

DecoratedPermutation perm_from_necklace(const GrassmannNecklace& nk) {
  const int n = nk.n();
  std::vector<int> out(static_cast<std::size_t>(n));
  std::map<int, int> colors;
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = nk[i];
    const Subset& next = nk[i + 1];
    if (next == cur) {
      out[static_cast<std::size_t>(i - 1)] = i;
      colors[i] = cur.contains(i) ? -1 : 1;
      continue;
    }
    const Subset added = set_difference(next, cur);
    out[static_cast<std::size_t>(i - 1)] = added.min();
  }
  return DecoratedPermutation(std::move(out), std::move(colors));
}

bool positroid_contains(const GrassmannNecklace& nk, const Subset& j) {
  require_same_ground(nk[1], j);
  if (j.size() != nk.k()) throw InvalidInput("positroid membership needs |J| = k");
  for (int i = 1; i <= nk.n(); ++i) {
    if (!gale_leq(nk[i], j, CyclicOrder{i})) return false;
  }
  return true;
}

Collection domain_in_for_necklace(const GrassmannNecklace& nk) {
  const std::vector<Subset> candidates = k_subsets(nk.n(), nk.k());
  const std::vector<int> keep = filter_indices(static_cast<int>(candidates.size()), [&](int t) {
    const Subset& c = candidates[t];
    for (const Subset& s : nk.sets()) {
      if (!is_weakly_separated(c, s)) return false;
    }
    return positroid_contains(nk, c);
  });
  std::vector<Subset> items;
  for (int t : keep) items.push_back(candidates[t]);
  if (items.empty()) return Collection::empty(nk.n());
  return Collection(std::move(items));
}

namespace {

bool pairwise_distinct_and_separated(const std::vector<Subset>& sets) {
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a] == sets[b] || !is_weakly_separated(sets[a], sets[b])) return false;
    }
  }
  return true;
}

std::vector<Subset> strip_closing_repeat(std::vector<Subset> sets) {
  if (sets.size() > 1 && sets.front() == sets.back()) sets.pop_back();
  return sets;
}

}  // namespace

bool is_simple_cyclic_pattern(const std::vector<Subset>& input) {
  const std::vector<Subset> sets = strip_closing_repeat(input);
  if (sets.size() < 2) return false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (symmetric_difference(sets[i], sets[(i + 1) % sets.size()]).size() != 1) return false;
  }
  return pairwise_distinct_and_separated(sets);
}

bool is_generalized_cyclic_pattern(const std::vector<Subset>& input) {
  const std::vector<Subset> sets = strip_closing_repeat(input);
  if (sets.size() < 2) return false;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() != sets.front().size()) return false;
    if (symmetric_difference(sets[i], sets[(i + 1) % sets.size()]).size() != 2) return false;
  }
  return pairwise_distinct_and_separated(sets);
}

PatternSplit simple_pattern_split(std::vector<Subset> pattern) {
  pattern = strip_closing_repeat(std::move(pattern));
  if (!is_simple_cyclic_pattern(pattern)) throw InvalidInput("not a simple cyclic pattern");
  const int n = pattern.front().n();
  const int r = static_cast<int>(pattern.size());

  std::vector<Subset> slopes;
  for (int i = 0; i < r; ++i) {
    const Subset& prev = pattern[static_cast<std::size_t>((i + r - 1) % r)];
    const Subset& next = pattern[static_cast<std::size_t>((i + 1) % r)];
    if (prev.size() != next.size()) slopes.push_back(pattern[static_cast<std::size_t>(i)]);
  }

  const Collection members(pattern);
  std::vector<Subset> in(pattern.begin(), pattern.end());
  std::vector<Subset> out(pattern.begin(), pattern.end());
  for (const Subset& x : all_subsets(n)) {
    if (members.contains(x)) continue;
    if (!std::all_of(pattern.begin(), pattern.end(), [&](const Subset& s) { return is_weakly_separated(x, s); })) {
      continue;
    }
    int below = 0;
    for (const Subset& s : slopes) {
      if (s.size() == x.size() && gale_leq(s, x)) ++below;
    }
    (below % 2 == 1 ? in : out).push_back(x);
  }
  return {Collection(std::move(in)), Collection(std::move(out))};
}

}  // namespace wsc
