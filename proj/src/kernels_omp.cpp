#include <algorithm>
#include <atomic>

#include <omp.h>

#include "clique_core.hpp"
#include "wsc/kernels.hpp"

namespace wsc {

namespace {
int g_threads = 0;  // 0: OpenMP default
}

void set_thread_count(int threads) {
  g_threads = threads < 0 ? 0 : threads;
  if (g_threads > 0) omp_set_num_threads(g_threads);
}

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

std::vector<int> filter_indices(int count, const std::function<bool(int)>& keep) {
  return thread_count() > 1 ? kernels::parallel::filter(count, keep) : kernels::serial::filter(count, keep);
}

void for_each_index(int count, const std::function<void(int)>& body) {
  if (thread_count() > 1) {
    kernels::parallel::for_each(count, body);
  } else {
    kernels::serial::for_each(count, body);
  }
}

}  // namespace wsc

namespace wsc::kernels::parallel {

using detail::Branch;
using detail::BronKerbosch;

std::vector<std::vector<int>> maximal_cliques(const Adjacency& adj) {
  detail::CollectSink root_sink;
  const std::vector<Branch> branches = BronKerbosch<detail::CollectSink>(adj, root_sink).root_branches();
  std::vector<std::vector<std::vector<int>>> per_branch(branches.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < branches.size(); ++i) {
    detail::CollectSink sink;
    BronKerbosch<detail::CollectSink> bk(adj, sink);
    bk.run_branch(branches[i]);
    per_branch[i] = std::move(sink.cliques);
  }
  std::vector<std::vector<int>> out;
  for (auto& part : per_branch) {
    for (auto& c : part) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SizeHistogram maximal_clique_sizes(const Adjacency& adj) {
  detail::HistogramSink root_sink;
  const std::vector<Branch> branches = BronKerbosch<detail::HistogramSink>(adj, root_sink).root_branches();
  std::vector<SizeHistogram> per_branch(branches.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < branches.size(); ++i) {
    detail::HistogramSink sink;
    BronKerbosch<detail::HistogramSink> bk(adj, sink);
    bk.run_branch(branches[i]);
    per_branch[i] = std::move(sink.sizes);
  }
  SizeHistogram out;
  for (const auto& part : per_branch) {
    for (const auto& [size, count] : part) out[size] += count;
  }
  return out;
}

int maximum_clique_size(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return 0;
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> all(static_cast<std::size_t>(words), 0);
  for (int v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);

  // Root level of the colour-sorted search, unrolled so that each root vertex
  // becomes an independent task sharing the incumbent size.
  std::vector<int> order;
  std::vector<int> bound;
  detail::colour_sort(adj, all, words, order, bound);
  std::atomic<int> best{0};
  const int roots = static_cast<int>(order.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = roots - 1; i >= 0; --i) {
    if (bound[i] <= best.load()) continue;
    const int v = order[i];
    // Candidates are the root vertices processed before v in serial order.
    std::vector<std::uint64_t> p(static_cast<std::size_t>(words), 0);
    for (int j = 0; j < i; ++j) p[order[j] >> 6] |= std::uint64_t{1} << (order[j] & 63);
    const std::uint64_t* nv = adj[v].data();
    for (int w = 0; w < words; ++w) p[w] &= nv[w];
    std::vector<int> clique{v};
    auto offer = [&](const std::vector<int>& c) {
      int size = static_cast<int>(c.size());
      int cur = best.load();
      while (size > cur && !best.compare_exchange_weak(cur, size)) {
      }
    };
    if (detail::is_zero(p.data(), words)) {
      offer(clique);
    } else {
      detail::expand_max_clique(adj, words, std::move(p), clique, [&] { return best.load(); }, offer);
    }
  }
  return best.load();
}

std::vector<int> filter(int count, const std::function<bool(int)>& keep) {
  std::vector<char> flags(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) flags[i] = keep(i) ? 1 : 0;
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

void for_each(int count, const std::function<void(int)>& body) {
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace wsc::kernels::parallel
