#pragma once

// Compatibility graphs over collections of subsets, maximal-clique
// enumeration, maximum clique size and purity reports.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wsc/collection.hpp"
#include "wsc/kernels.hpp"

namespace wsc {

enum class Relation { weak, chord };

Relation parse_relation(std::string_view text);
std::string_view relation_name(Relation r);
bool related(Relation r, const Subset& a, const Subset& b);

struct CompatGraph {
  Collection vertices;
  Adjacency adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  bool adjacent(int u, int v) const { return adjacency[u].test(v); }
  std::size_t edge_count() const;
  /// Members of the clique given by vertex indices, as a collection.
  Collection collection_of(const std::vector<int>& clique) const;
};

CompatGraph build_compat_graph(const Collection& domain, Relation relation);
/// Graph from an explicit edge list (used for tests on arbitrary graphs).
/// Vertices are left empty.
CompatGraph graph_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Every inclusion-maximal clique as sorted vertex indices, in lexicographic
/// order. Independent of the worker count.
std::vector<std::vector<int>> maximal_clique_indices(const CompatGraph& g);
/// Same cliques as collections; canonical order.
std::vector<Collection> enumerate_maximal_cliques(const CompatGraph& g);

int max_clique_size(const CompatGraph& g);
/// One maximum clique (serial branch and bound, deterministic).
Collection max_clique(const CompatGraph& g);

struct PurityReport {
  std::size_t domain_size = 0;
  SizeHistogram clique_sizes;
  bool is_pure = false;
  std::optional<int> rank;
  /// Absent in streaming mode.
  std::optional<std::uint64_t> clique_count;

  int min_size() const { return clique_sizes.empty() ? 0 : clique_sizes.begin()->first; }
  int max_size() const { return clique_sizes.empty() ? 0 : clique_sizes.rbegin()->first; }
};

/// Aggregates maximal-clique sizes without storing the cliques. With
/// `streaming` set the total count is not reported.
PurityReport purity_report(const CompatGraph& g, bool streaming = false);
PurityReport purity_report(const Collection& domain, Relation relation, bool streaming = false);

/// Greedy extension of `partial` to a maximal related subcollection of
/// `domain`, scanning the domain in canonical order.
Collection complete_to_maximal(const Collection& partial, const Collection& domain,
                               Relation relation = Relation::weak);

/// True iff no member of `domain` outside `c` is related to all of `c`.
bool is_maximal_in(const Collection& c, const Collection& domain, Relation relation = Relation::weak);

}  // namespace wsc
