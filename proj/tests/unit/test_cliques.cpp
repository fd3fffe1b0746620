#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "wsc/cliques.hpp"
#include "wsc/domains.hpp"

using namespace wsc;

namespace {

Subset S(std::initializer_list<int> e, int n) { return Subset::of(e, n); }

std::vector<std::vector<bool>> dense(const CompatGraph& g) {
  std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
  for (int u = 0; u < g.size(); ++u) {
    for (int v = 0; v < g.size(); ++v) adj[u][v] = g.adjacent(u, v);
  }
  return adj;
}

CompatGraph random_graph(std::mt19937_64& rng, int count, double density) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < count; ++u) {
    for (int v = u + 1; v < count; ++v) {
      if (coin(rng) < density) edges.emplace_back(u, v);
    }
  }
  return graph_from_edges(count, edges);
}

struct ThreadGuard {
  explicit ThreadGuard(int t) { set_thread_count(t); }
  ~ThreadGuard() { set_thread_count(1); }
};

}  // namespace

TEST_CASE("compatibility graphs") {
  const CompatGraph boundary = build_compat_graph(boundary_intervals(3, 6), Relation::weak);
  CHECK(boundary.size() == 6);
  CHECK(boundary.edge_count() == 15);
  const CompatGraph pair = build_compat_graph(Collection({S({1, 2, 4}, 6), S({3, 5, 6}, 6)}), Relation::weak);
  CHECK(pair.size() == 2);
  CHECK(pair.edge_count() == 0);
  const CompatGraph single = build_compat_graph(Collection({S({1}, 3)}), Relation::chord);
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(max_clique_size(single) == 1);
  CHECK_THROWS_AS(parse_relation("strong"), InvalidInput);
  CHECK_THROWS_AS(graph_from_edges(2, {{0, 0}}), InvalidInput);
}

TEST_CASE("four-cycle of the rank-12 example has four maximal edges") {
  const int n = 10;
  const Collection cycle({S({1, 2, 3, 4, 9}, n), S({1, 3, 4, 5, 6}, n), S({5, 6, 7, 8, 10}, n), S({2, 7, 8, 9, 10}, n)});
  const CompatGraph g = build_compat_graph(cycle, Relation::weak);
  CHECK(g.edge_count() == 4);
  const auto cliques = enumerate_maximal_cliques(g);
  CHECK(cliques.size() == 4);
  for (const auto& c : cliques) CHECK(c.size() == 2);
}

TEST_CASE("small explicit graphs") {
  const CompatGraph edgeless = graph_from_edges(3, {});
  const auto e = maximal_clique_indices(edgeless);
  CHECK(e == std::vector<std::vector<int>>{{0}, {1}, {2}});
  const CompatGraph k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(maximal_clique_indices(k3) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(max_clique_size(k3) == 3);
  const CompatGraph empty = graph_from_edges(0, {});
  CHECK(maximal_clique_indices(empty).empty());
  CHECK(max_clique_size(empty) == 0);
}

TEST_CASE("enumeration matches the subset oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = 1 + static_cast<int>(rng() % 14);
    const double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const CompatGraph g = random_graph(rng, count, density);
    const auto expected = oracle::maximal_cliques(count, dense(g));
    const auto serial = kernels::serial::maximal_cliques(g.adjacency);
    REQUIRE(serial == expected);
    REQUIRE(kernels::parallel::maximal_cliques(g.adjacency) == expected);
    std::size_t largest = 0;
    for (const auto& c : expected) largest = std::max(largest, c.size());
    REQUIRE(kernels::serial::maximum_clique(g.adjacency).size() == largest);
    REQUIRE(kernels::parallel::maximum_clique_size(g.adjacency) == static_cast<int>(largest));
    SizeHistogram hist;
    for (const auto& c : expected) ++hist[static_cast<int>(c.size())];
    REQUIRE(kernels::serial::maximal_clique_sizes(g.adjacency) == hist);
    REQUIRE(kernels::parallel::maximal_clique_sizes(g.adjacency) == hist);
  }
}

TEST_CASE("serial and parallel kernels agree on larger graphs") {
  std::mt19937_64 rng(99);
  ThreadGuard guard(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int count = 40 + static_cast<int>(rng() % 90);
    const CompatGraph g = random_graph(rng, count, 0.5);
    const auto cliques = kernels::serial::maximal_cliques(g.adjacency);
    REQUIRE(kernels::parallel::maximal_cliques(g.adjacency) == cliques);
    const auto best = kernels::serial::maximum_clique(g.adjacency);
    REQUIRE(kernels::parallel::maximum_clique_size(g.adjacency) == static_cast<int>(best.size()));
    std::size_t largest = 0;
    bool all_maximal = true;
    for (const auto& c : cliques) {
      largest = std::max(largest, c.size());
      // Maximality: no outside vertex is adjacent to every member.
      for (int v = 0; v < count; ++v) {
        if (std::find(c.begin(), c.end(), v) != c.end()) continue;
        if (std::all_of(c.begin(), c.end(), [&](int w) { return g.adjacent(v, w); })) all_maximal = false;
      }
    }
    REQUIRE(all_maximal);
    REQUIRE(best.size() == largest);
    for (std::size_t a = 0; a < best.size(); ++a) {
      for (std::size_t b = a + 1; b < best.size(); ++b) REQUIRE(g.adjacent(best[a], best[b]));
    }
  }
}

TEST_CASE("maximum clique sizes on the two distance examples") {
  const int n = 6;
  CHECK(max_clique_size(build_compat_graph(build_domain_AIJ(S({1, 2, 4}, n), S({3, 5, 6}, n)), Relation::weak)) == 8);
  CHECK(max_clique_size(build_compat_graph(build_domain_AIJ(S({1, 3, 5}, n), S({2, 4, 6}, n)), Relation::weak)) == 6);
}

TEST_CASE("purity of classical domains") {
  const PurityReport grass = purity_report(Collection(k_subsets(6, 3)), Relation::weak);
  CHECK(grass.is_pure);
  CHECK(grass.rank == 10);
  CHECK(grass.domain_size == 20);
  const PurityReport cube = purity_report(Collection(all_subsets(4)), Relation::weak);
  CHECK(cube.is_pure);
  CHECK(cube.rank == 11);
  const PurityReport streaming = purity_report(Collection(all_subsets(4)), Relation::weak, true);
  CHECK_FALSE(streaming.clique_count.has_value());
  CHECK(streaming.clique_sizes == cube.clique_sizes);

  const Subset i = S({1, 2, 4, 6, 8}, 10);
  const PurityReport ex = purity_report(build_domain_AIJ(i, complement(i)), Relation::weak);
  CHECK(ex.is_pure);
  CHECK(ex.rank == 12);
  CHECK(ex.clique_count == 4);
}

TEST_CASE("results do not depend on the worker count") {
  const Collection domain(k_subsets(7, 3));
  const CompatGraph g = build_compat_graph(domain, Relation::weak);
  const auto serial = enumerate_maximal_cliques(g);
  ThreadGuard guard(3);
  const CompatGraph g3 = build_compat_graph(domain, Relation::weak);
  CHECK(g3.adjacency == g.adjacency);
  CHECK(enumerate_maximal_cliques(g3) == serial);
}

TEST_CASE("greedy completion to a maximal collection") {
  const Collection grass(k_subsets(6, 3));
  const Collection one = complete_to_maximal(Collection({S({1, 2, 4}, 6)}), grass);
  CHECK(one.size() == 10);
  CHECK(one.contains(S({1, 2, 4}, 6)));
  CHECK(is_weakly_separated(one));
  CHECK(is_maximal_in(one, grass));

  const Subset i = S({1, 2, 4}, 6);
  const Collection domain = build_domain_AIJ(i, complement(i));
  const Collection given = boundary_intervals(3, 6).with(S({1, 2, 5}, 6)).with(S({1, 3, 4}, 6));
  CHECK(complete_to_maximal(given, domain) == given);
  CHECK(given.size() == 8);

  const Collection pairs(k_subsets(4, 2));
  CHECK(complete_to_maximal(Collection::empty(4), pairs).size() == 5);
  CHECK_THROWS_AS(complete_to_maximal(Collection({S({1, 3}, 4), S({2, 4}, 4)}), pairs), InvalidInput);
  CHECK_THROWS_AS(complete_to_maximal(Collection({S({1, 2, 3}, 4)}), pairs), InvalidInput);
}
