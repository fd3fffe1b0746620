#include "wsc/cliques.hpp"

#include <algorithm>
#include <string>

namespace wsc {

Relation parse_relation(std::string_view text) {
  if (text == "weak") return Relation::weak;
  if (text == "chord") return Relation::chord;
  throw InvalidInput("unknown relation '" + std::string(text) + "' (expected weak or chord)");
}

std::string_view relation_name(Relation r) { return r == Relation::weak ? "weak" : "chord"; }

bool related(Relation r, const Subset& a, const Subset& b) {
  return r == Relation::weak ? is_weakly_separated(a, b) : is_chord_separated(a, b);
}

std::size_t CompatGraph::edge_count() const {
  std::size_t twice = 0;
  for (const VertexSet& row : adjacency) twice += static_cast<std::size_t>(row.count());
  return twice / 2;
}

Collection CompatGraph::collection_of(const std::vector<int>& clique) const {
  std::vector<Subset> items;
  items.reserve(clique.size());
  for (int v : clique) items.push_back(vertices[static_cast<std::size_t>(v)]);
  return Collection(std::move(items));
}

CompatGraph build_compat_graph(const Collection& domain, Relation relation) {
  const int n = static_cast<int>(domain.size());
  CompatGraph g;
  g.vertices = domain;
  g.adjacency.assign(static_cast<std::size_t>(n), VertexSet(n));
  auto row = [&](int u) {
    for (int v = 0; v < n; ++v) {
      if (v != u && related(relation, domain[u], domain[v])) g.adjacency[u].set(v);
    }
    return true;
  };
  // Rows are independent, so the filter kernel doubles as a parallel-for.
  filter_indices(n, row);
  return g;
}

CompatGraph graph_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  CompatGraph g;
  g.adjacency.assign(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v) {
      throw InvalidInput("edge endpoint out of range or loop");
    }
    g.adjacency[u].set(v);
    g.adjacency[v].set(u);
  }
  return g;
}

std::vector<std::vector<int>> maximal_clique_indices(const CompatGraph& g) {
  return thread_count() > 1 ? kernels::parallel::maximal_cliques(g.adjacency)
                            : kernels::serial::maximal_cliques(g.adjacency);
}

std::vector<Collection> enumerate_maximal_cliques(const CompatGraph& g) {
  std::vector<Collection> out;
  for (const auto& c : maximal_clique_indices(g)) out.push_back(g.collection_of(c));
  return out;
}

int max_clique_size(const CompatGraph& g) {
  if (thread_count() > 1) return kernels::parallel::maximum_clique_size(g.adjacency);
  return static_cast<int>(kernels::serial::maximum_clique(g.adjacency).size());
}

Collection max_clique(const CompatGraph& g) { return g.collection_of(kernels::serial::maximum_clique(g.adjacency)); }

PurityReport purity_report(const CompatGraph& g, bool streaming) {
  PurityReport r;
  r.domain_size = static_cast<std::size_t>(g.size());
  r.clique_sizes = thread_count() > 1 ? kernels::parallel::maximal_clique_sizes(g.adjacency)
                                      : kernels::serial::maximal_clique_sizes(g.adjacency);
  r.is_pure = r.clique_sizes.size() == 1;
  if (r.is_pure) r.rank = r.clique_sizes.begin()->first;
  if (!streaming) {
    std::uint64_t total = 0;
    for (const auto& [size, count] : r.clique_sizes) total += count;
    r.clique_count = total;
  }
  return r;
}

PurityReport purity_report(const Collection& domain, Relation relation, bool streaming) {
  return purity_report(build_compat_graph(domain, relation), streaming);
}

Collection complete_to_maximal(const Collection& partial, const Collection& domain, Relation relation) {
  if (!is_subcollection(partial, domain)) throw InvalidInput("partial collection is not inside the domain");
  std::vector<Subset> chosen(partial.begin(), partial.end());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      if (!related(relation, chosen[i], chosen[j])) {
        throw InvalidInput("partial collection is not pairwise " + std::string(relation_name(relation)) +
                           "ly separated");
      }
    }
  }
  for (const Subset& s : domain) {
    if (partial.contains(s)) continue;
    if (std::all_of(chosen.begin(), chosen.end(), [&](const Subset& t) { return related(relation, s, t); })) {
      chosen.push_back(s);
    }
  }
  Collection out(std::move(chosen));
  if (out.empty()) return Collection::empty(domain.n());
  return out;
}

bool is_maximal_in(const Collection& c, const Collection& domain, Relation relation) {
  for (const Subset& s : domain) {
    if (c.contains(s)) continue;
    if (std::all_of(c.begin(), c.end(), [&](const Subset& t) { return related(relation, s, t); })) return false;
  }
  return true;
}

}  // namespace wsc
