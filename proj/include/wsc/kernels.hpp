#pragma once

// Index-level graph kernels. Each kernel has a serial reference version and
// an OpenMP version; both return identical results for identical input.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "wsc/vertex_set.hpp"

namespace wsc {

/// Symmetric, irreflexive adjacency rows.
using Adjacency = std::vector<VertexSet>;

/// Clique size -> number of maximal cliques of that size.
using SizeHistogram = std::map<int, std::uint64_t>;

/// Worker count used by the library; 1 selects the serial kernels.
void set_thread_count(int threads);
int thread_count();

namespace kernels {

namespace serial {

/// Every maximal clique, each sorted ascending, list sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Adjacency& adj);
SizeHistogram maximal_clique_sizes(const Adjacency& adj);
/// A maximum clique (sorted); the lexicographically first one found by the
/// branch-and-bound order, deterministic.
std::vector<int> maximum_clique(const Adjacency& adj);
std::vector<int> filter(int count, const std::function<bool(int)>& keep);
void for_each(int count, const std::function<void(int)>& body);

}  // namespace serial

namespace parallel {

std::vector<std::vector<int>> maximal_cliques(const Adjacency& adj);
SizeHistogram maximal_clique_sizes(const Adjacency& adj);
int maximum_clique_size(const Adjacency& adj);
std::vector<int> filter(int count, const std::function<bool(int)>& keep);
/// Dynamic schedule; `body` must only write to per-index state.
void for_each(int count, const std::function<void(int)>& body);

}  // namespace parallel

}  // namespace kernels

/// Indices in [0, count) accepted by `keep`, ascending; runs the parallel
/// kernel when more than one worker is configured.
std::vector<int> filter_indices(int count, const std::function<bool(int)>& keep);
/// Calls `body` on every index in [0, count), in parallel when configured.
void for_each_index(int count, const std::function<void(int)>& body);

}  // namespace wsc
