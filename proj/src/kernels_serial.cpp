#include <algorithm>

#include "clique_core.hpp"
#include "wsc/kernels.hpp"

namespace wsc::kernels::serial {

std::vector<std::vector<int>> maximal_cliques(const Adjacency& adj) {
  detail::CollectSink sink;
  detail::BronKerbosch<detail::CollectSink> bk(adj, sink);
  bk.run_all();
  std::sort(sink.cliques.begin(), sink.cliques.end());
  return std::move(sink.cliques);
}

SizeHistogram maximal_clique_sizes(const Adjacency& adj) {
  detail::HistogramSink sink;
  detail::BronKerbosch<detail::HistogramSink> bk(adj, sink);
  bk.run_all();
  return std::move(sink.sizes);
}

std::vector<int> maximum_clique(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(words), 0);
  for (int v = 0; v < n; ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<int> best_clique;
  std::vector<int> clique;
  detail::expand_max_clique(
      adj, words, std::move(p), clique, [&] { return static_cast<int>(best_clique.size()); },
      [&](const std::vector<int>& c) {
        if (c.size() > best_clique.size()) best_clique = c;
      });
  std::sort(best_clique.begin(), best_clique.end());
  return best_clique;
}

std::vector<int> filter(int count, const std::function<bool(int)>& keep) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    if (keep(i)) out.push_back(i);
  }
  return out;
}

void for_each(int count, const std::function<void(int)>& body) {
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace wsc::kernels::serial
