#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "wsc/collection.hpp"
#include "wsc/ground.hpp"

using namespace wsc;

namespace {
Subset S(std::initializer_list<int> e, int n) { return Subset::of(e, n); }
}  // namespace

TEST_CASE("subset construction and invariants") {
  const Subset s = S({1, 2, 4}, 6);
  CHECK(s.size() == 3);
  CHECK(s.mask() == 0b1011);
  CHECK(s.elements() == std::vector<int>{1, 2, 4});
  CHECK(s.min() == 1);
  CHECK(s.max() == 4);
  CHECK_THROWS_AS(Subset(0b1000000, 6), InvalidInput);
  CHECK_THROWS_AS(S({7}, 6), InvalidInput);
  CHECK_THROWS_AS(Subset(0, 0), InvalidInput);
  CHECK_THROWS_AS(Subset(0, 65), InvalidInput);
  CHECK(Subset::full(64).size() == 64);
  CHECK_THROWS_AS(set_union(S({1}, 4), S({1}, 5)), InvalidInput);
  CHECK_THROWS_AS(is_weakly_separated(S({1}, 4), S({1}, 5)), InvalidInput);
}

TEST_CASE("cyclic intervals") {
  CHECK(cyclic_interval(2, 4, 6) == S({2, 3, 4}, 6));
  CHECK(cyclic_interval(5, 2, 6) == S({5, 6, 1, 2}, 6));
  CHECK(cyclic_interval(3, 3, 6) == S({3}, 6));
  CHECK_THROWS_AS(cyclic_interval(0, 3, 6), InvalidInput);
  CHECK_THROWS_AS(cyclic_interval(2, 7, 6), InvalidInput);
  CHECK(is_cyclic_interval(S({5, 6, 1}, 6)));
  CHECK_FALSE(is_cyclic_interval(S({1, 3}, 4)));
  CHECK(is_cyclic_interval(Subset::empty(5)));
  CHECK(is_cyclic_interval(Subset::full(5)));
  for (int n = 1; n <= 8; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const Subset iv = cyclic_interval(a, b, n);
        CHECK(iv.size() == ((b - a) % n + n) % n + 1);
        CHECK(is_cyclic_interval(iv));
      }
    }
  }
}

TEST_CASE("surrounds and weak separation examples") {
  CHECK(surrounds(S({1, 5}, 6), S({3}, 6)));
  CHECK_FALSE(surrounds(S({3}, 6), S({1, 5}, 6)));
  CHECK(surrounds(Subset::empty(6), S({2, 4}, 6)));
  CHECK_FALSE(is_weakly_separated(S({1, 2, 4}, 6), S({3, 5, 6}, 6)));
  CHECK_FALSE(is_weakly_separated(S({2}, 4), S({1, 3}, 4)));
  CHECK(is_weakly_separated(S({2, 5}, 6), S({2, 5}, 6)));
}

TEST_CASE("chord separation examples") {
  CHECK(is_chord_separated(S({1, 3}, 4), S({2}, 4)));
  CHECK_FALSE(is_chord_separated(S({1, 3}, 4), S({2, 4}, 4)));
  CHECK_FALSE(is_chord_separated(S({1, 2, 4}, 6), S({3, 5, 6}, 6)));
}

TEST_CASE("gale order and transforms") {
  CHECK(gale_leq(S({1, 3}, 4), S({2, 4}, 4)));
  CHECK_FALSE(gale_leq(S({2, 4}, 4), S({1, 3}, 4)));
  CHECK(gale_leq(S({2, 4}, 4), S({2, 4}, 4), CyclicOrder{3}));
  // Under <_3 on [4]: 3 < 4 < 1 < 2, so {3,4} is below {1,2}.
  CHECK(gale_leq(S({3, 4}, 4), S({1, 2}, 4), CyclicOrder{3}));
  CHECK_FALSE(gale_leq(S({1, 2}, 4), S({3, 4}, 4), CyclicOrder{3}));
  CHECK(complement(S({1, 2, 4}, 6)) == S({3, 5, 6}, 6));
  CHECK(rotate(S({5, 6}, 6), 2) == S({1, 2}, 6));
  CHECK(rotate(S({1, 4}, 6), 0) == S({1, 4}, 6));
  CHECK(rotate(S({1, 2}, 6), -2) == S({5, 6}, 6));
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_subset("1,2,4", 6) == S({1, 2, 4}, 6));
  CHECK(parse_subset(" 4, 1 ", 6) == S({1, 4}, 6));
  CHECK(parse_subset("", 6).is_empty());
  CHECK_THROWS_AS(parse_subset("1,2,7", 6), InvalidInput);
  CHECK_THROWS_AS(parse_subset("1,x", 6), InvalidInput);
  CHECK_THROWS_AS(parse_subset("1,,2", 6), InvalidInput);
  CHECK(format_subset(S({4, 1, 2}, 6)) == "1,2,4");
  CHECK(k_subsets(6, 3).size() == 20);
  CHECK(all_subsets(4).size() == 16);
}

TEST_CASE("predicates agree with the set-based oracle on all pairs, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Subset& s : all_subsets(n)) {
      for (const Subset& t : all_subsets(n)) {
        const auto os = oracle::from_mask(s.mask());
        const auto ot = oracle::from_mask(t.mask());
        REQUIRE(is_weakly_separated(s, t) == oracle::weakly_separated(os, ot));
        REQUIRE(is_chord_separated(s, t) == oracle::chord_separated(os, ot, n));
        REQUIRE(surrounds(s, t) == oracle::surrounds(os, ot));
        REQUIRE(is_weakly_separated(s, t) == is_weakly_separated(t, s));
        REQUIRE(is_chord_separated(s, t) == is_chord_separated(t, s));
      }
    }
  }
}

TEST_CASE("symmetry on random pairs, n <= 12") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Subset s(rng() & full_mask(n), n);
    const Subset t(rng() & full_mask(n), n);
    REQUIRE(is_weakly_separated(s, t) == is_weakly_separated(t, s));
    REQUIRE(is_chord_separated(s, t) == is_chord_separated(t, s));
    REQUIRE(is_weakly_separated(s, t) == oracle::weakly_separated(oracle::from_mask(s.mask()), oracle::from_mask(t.mask())));
  }
}

TEST_CASE("equal-size pairs: weak and chord separation coincide, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = k_subsets(n, k);
      for (const Subset& s : subsets) {
        for (const Subset& t : subsets) REQUIRE(is_weakly_separated(s, t) == is_chord_separated(s, t));
      }
    }
  }
}

TEST_CASE("rotation invariance of chord separation, complement invariance at equal size") {
  for (int n = 2; n <= 6; ++n) {
    for (const Subset& s : all_subsets(n)) {
      for (const Subset& t : all_subsets(n)) {
        for (int r = 0; r < n; ++r) {
          REQUIRE(is_chord_separated(s, t) == is_chord_separated(rotate(s, r), rotate(t, r)));
        }
        if (s.size() == t.size()) {
          REQUIRE(is_weakly_separated(s, t) == is_weakly_separated(complement(s), complement(t)));
        }
      }
    }
  }
}

TEST_CASE("intervals are weakly separated from every set of their size") {
  for (int n = 1; n <= 8; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int len = 1; len < n; ++len) {
        const Subset iv = cyclic_interval(a, (a + len - 2) % n + 1, n);
        for (const Subset& t : k_subsets(n, len)) REQUIRE(is_weakly_separated(iv, t));
      }
    }
  }
}

TEST_CASE("gale order is a partial order on each cardinality") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= std::min(n, 3); ++k) {
      const auto subsets = k_subsets(n, k);
      for (int base = 1; base <= n; ++base) {
        const CyclicOrder ord{base};
        for (const Subset& a : subsets) {
          REQUIRE(gale_leq(a, a, ord));
          for (const Subset& b : subsets) {
            if (a != b && gale_leq(a, b, ord)) REQUIRE_FALSE(gale_leq(b, a, ord));
            for (const Subset& c : subsets) {
              if (gale_leq(a, b, ord) && gale_leq(b, c, ord)) REQUIRE(gale_leq(a, c, ord));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("cyclic order of four elements") {
  CHECK(cyclically_ordered(1, 2, 3, 4, 4));
  CHECK(cyclically_ordered(3, 4, 1, 2, 4));
  CHECK_FALSE(cyclically_ordered(1, 3, 2, 4, 4));
  CHECK_FALSE(cyclically_ordered(1, 1, 2, 3, 4));
}

TEST_CASE("collections are canonical") {
  const Collection c({S({3}, 4), S({1}, 4), S({3}, 4)});
  CHECK(c.size() == 2);
  CHECK(c[0] == S({1}, 4));
  CHECK(c.contains(S({3}, 4)));
  CHECK(c.index_of(S({2}, 4)) == -1);
  CHECK_THROWS_AS(Collection({S({1}, 4), S({1}, 5)}), InvalidInput);
  CHECK_THROWS_AS(c.with(S({1}, 5)), InvalidInput);
  CHECK(c.with(S({2}, 4)).size() == 3);
  CHECK(c.without(S({1}, 4)).size() == 1);
  CHECK(is_subcollection(c.without(S({1}, 4)), c));
}
