#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "wsc/cliques.hpp"
#include "wsc/domains.hpp"
#include "wsc/mutations.hpp"
#include "wsc/necklaces.hpp"

using namespace wsc;

namespace {

Subset S(std::initializer_list<int> e, int n) { return Subset::of(e, n); }

Collection square_seed() {
  const int n = 4;
  return Collection({S({1, 2}, n), S({2, 3}, n), S({3, 4}, n), S({1, 4}, n), S({1, 3}, n)});
}

std::vector<Collection> all_maximal(int n, int k) {
  return enumerate_maximal_cliques(build_compat_graph(Collection(k_subsets(n, k)), Relation::weak));
}

}  // namespace

TEST_CASE("square in [4] choose 2") {
  const Collection c = square_seed();
  const std::vector<SquareMove> moves = find_square_moves(c);
  REQUIRE(moves.size() == 1);
  const SquareMove& m = moves[0];
  CHECK(m.from == S({1, 3}, 4));
  CHECK(m.to == S({2, 4}, 4));
  CHECK(m.s.is_empty());
  CHECK((m.a == 1 && m.b == 2 && m.c == 3 && m.d == 4));

  const Collection after = apply_square_move(c, m);
  CHECK(after == Collection({S({1, 2}, 4), S({2, 3}, 4), S({3, 4}, 4), S({1, 4}, 4), S({2, 4}, 4)}));
  CHECK(is_maximal_in(after, Collection(k_subsets(4, 2))));

  const std::vector<SquareMove> back = find_square_moves(after);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == m.reversed());
  CHECK(apply_square_move(after, m.reversed()) == c);
  CHECK_THROWS_AS(apply_square_move(after, m), InvalidInput);
}

TEST_CASE("move detection contracts") {
  const int n = 5;
  std::vector<Subset> singles;
  for (int e = 1; e <= n; ++e) singles.push_back(S({e}, n));
  CHECK(find_square_moves(Collection(singles)).empty());
  CHECK_THROWS_AS(find_square_moves(Collection({S({1, 2}, 4), S({2, 3}, 4)})), ContractViolation);
  CHECK_THROWS_AS(find_square_moves(Collection({S({1, 2}, 4), S({1, 2, 3}, 4)})), ContractViolation);
}

TEST_CASE("every reported move is enabled and reversible") {
  const Collection grid(k_subsets(6, 3));
  for (const Collection& c : all_maximal(6, 3)) {
    for (const SquareMove& m : find_square_moves(c)) {
      const int n = 6;
      auto sxy = [&](int x, int y) { return Subset(m.s.mask() | Subset::of({x, y}, n).mask(), n); };
      REQUIRE(c.contains(sxy(m.a, m.b)));
      REQUIRE(c.contains(sxy(m.b, m.c)));
      REQUIRE(c.contains(sxy(m.c, m.d)));
      REQUIRE(c.contains(sxy(m.d, m.a)));
      REQUIRE(c.contains(m.from));
      const Collection after = apply_square_move(c, m);
      REQUIRE(is_maximal_in(after, grid));
      REQUIRE(apply_square_move(after, m.reversed()) == c);
    }
  }
}

TEST_CASE("exploration of small grids") {
  const MutationGraphSummary small = explore_mutation_graph(square_seed());
  CHECK(small.node_count == 2);
  CHECK(small.edge_count == 1);
  CHECK(small.complete);

  const MutationGraphSummary capped = explore_mutation_graph(square_seed(), {.budget = 1});
  CHECK(capped.node_count == 1);
  CHECK_FALSE(capped.complete);

  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const std::vector<Collection> expected = all_maximal(n, k);
    for (std::size_t seed = 0; seed < expected.size(); seed += 7) {
      const MutationGraphSummary g = explore_mutation_graph(expected[seed], {.keep_nodes = true});
      CHECK(g.complete);
      std::vector<Collection> found = g.nodes;
      std::sort(found.begin(), found.end());
      REQUIRE(found == expected);
      const Collection boundary = boundary_intervals(k, n);
      for (const Collection& c : found) {
        REQUIRE(static_cast<int>(c.size()) == k * (n - k) + 1);
        REQUIRE(is_subcollection(boundary, c));
      }
    }
  }
}

TEST_CASE("exploration is independent of the worker count") {
  const Collection seed = all_maximal(7, 3).front();
  set_thread_count(1);
  const MutationGraphSummary one = explore_mutation_graph(seed, {.keep_nodes = true});
  set_thread_count(4);
  const MutationGraphSummary four = explore_mutation_graph(seed, {.keep_nodes = true});
  set_thread_count(0);
  CHECK(one.node_count == four.node_count);
  CHECK(one.edge_count == four.edge_count);
  CHECK(one.nodes == four.nodes);
}

TEST_CASE("mutation distances") {
  const DistanceResult r = mutation_distance(S({1, 3}, 4), S({2, 4}, 4));
  REQUIRE(r.distance);
  CHECK(*r.distance == 1);
  REQUIRE(r.path.size() == 1);
  CHECK(r.source.contains(S({1, 3}, 4)));
  CHECK(r.target.contains(S({2, 4}, 4)));
  CHECK(apply_square_move(r.source, r.path[0]) == r.target);

  const DistanceResult two = mutation_distance(S({1, 2, 4}, 6), S({3, 5, 6}, 6));
  REQUIRE(two.distance);
  CHECK(*two.distance == 2);
  Collection walk = two.source;
  for (const SquareMove& m : two.path) walk = apply_square_move(walk, m);
  CHECK(walk == two.target);

  const DistanceResult zero = mutation_distance(S({1, 2, 3}, 6), S({2, 3, 4}, 6));
  CHECK(zero.distance == 0);
  CHECK(zero.path.empty());
  CHECK(zero.source.contains(S({1, 2, 3}, 6)));
  CHECK(zero.source.contains(S({2, 3, 4}, 6)));

  CHECK_THROWS_AS(mutation_distance(S({1, 2}, 6), S({2, 3, 4}, 6)), InvalidInput);
  CHECK_THROWS_AS(mutation_distance(S({1, 2, 3, 4}, 8), S({5, 6, 7, 8}, 8)), InvalidInput);

  const DistanceResult starved = mutation_distance(S({1, 3, 5}, 6), S({2, 4, 6}, 6), {.budget = 2});
  CHECK(starved.budget_exhausted());
  CHECK(starved.nodes_explored == 2);
}

TEST_CASE("cluster distance bounds mutation distance") {
  const int n = 6;
  const std::vector<Subset> sets = k_subsets(n, 3);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const DistanceResult r = mutation_distance(sets[a], sets[b]);
      REQUIRE(r.distance);
      REQUIRE(cluster_distance(sets[a], sets[b], DistanceMethod::exact).value <= *r.distance);
      REQUIRE((*r.distance == 0) == is_weakly_separated(sets[a], sets[b]));
      REQUIRE(static_cast<int>(r.path.size()) == *r.distance);
    }
  }
}

TEST_CASE("distance witnesses do not depend on the worker count") {
  set_thread_count(1);
  const DistanceResult one = mutation_distance(S({1, 3, 5}, 7), S({2, 4, 7}, 7));
  set_thread_count(3);
  const DistanceResult three = mutation_distance(S({1, 3, 5}, 7), S({2, 4, 7}, 7));
  set_thread_count(0);
  CHECK(one.distance == three.distance);
  CHECK(one.source == three.source);
  CHECK(one.path == three.path);
}

TEST_CASE("necklace domains are pure of rank length + 1 and mutation connected") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      bool derangement = true;
      for (int i = 1; i <= n; ++i) derangement = derangement && v[static_cast<std::size_t>(i - 1)] != i;
      if (!derangement) continue;
      const DecoratedPermutation p(v);
      int k = 0;
      for (int j = 1; j <= n; ++j) k += j < p.inverse(j) ? 1 : 0;
      const GrassmannNecklace nk = necklace_from_perm(p, k);
      if (!nk.connected()) continue;

      const Collection d = domain_in_for_necklace(nk);
      const std::vector<Collection> maximal = enumerate_maximal_cliques(build_compat_graph(d, Relation::weak));
      const int rank = length_of(p, k).length + 1;
      for (const Collection& c : maximal) REQUIRE(static_cast<int>(c.size()) == rank);

      const Collection seed = complete_to_maximal(Collection(nk.sets()), d);
      const MutationGraphSummary g = explore_mutation_graph(seed, {.domain = d, .keep_nodes = true});
      std::vector<Collection> found = g.nodes;
      std::sort(found.begin(), found.end());
      REQUIRE(found == maximal);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}
