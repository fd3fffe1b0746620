#pragma once

// Word-array Bron–Kerbosch and bitset branch-and-bound shared by the serial
// and OpenMP kernels. Internal header.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "wsc/kernels.hpp"

namespace wsc::kernels::detail {

inline int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

inline bool is_zero(const std::uint64_t* a, int words) {
  for (int i = 0; i < words; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

template <class F>
inline void for_each_bit(const std::uint64_t* a, int words, F&& f) {
  for (int i = 0; i < words; ++i) {
    for (std::uint64_t w = a[i]; w != 0; w &= w - 1) f(i * 64 + std::countr_zero(w));
  }
}

/// One root-level branch of the pivoted enumeration: grow from `seed` with
/// candidate set P and excluded set X.
struct Branch {
  int seed = -1;
  std::vector<std::uint64_t> p;
  std::vector<std::uint64_t> x;
};

/// Bron–Kerbosch with pivoting (pivot = max |P ∩ N(u)| over P ∪ X, lowest
/// index on ties). Buffers for every depth are preallocated.
template <class Sink>
class BronKerbosch {
public:
  BronKerbosch(const Adjacency& adj, Sink& sink)
      : adj_(adj), sink_(sink), n_(static_cast<int>(adj.size())), words_((n_ + 63) / 64) {
    buffer_.assign(static_cast<std::size_t>(2 * (n_ + 2) * std::max(words_, 1)), 0);
  }

  /// Splits the root call into independent branches, in the order the serial
  /// recursion would visit them.
  std::vector<Branch> root_branches() const {
    std::vector<std::uint64_t> p(static_cast<std::size_t>(words_), 0);
    std::vector<std::uint64_t> x(static_cast<std::size_t>(words_), 0);
    for (int v = 0; v < n_; ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<Branch> out;
    if (n_ == 0) return out;
    const int pivot = choose_pivot(p.data(), x.data());
    std::vector<int> candidates;
    for_each_bit(p.data(), words_, [&](int v) {
      if (!adj_[pivot].test(v)) candidates.push_back(v);
    });
    for (int v : candidates) {
      Branch b;
      b.seed = v;
      b.p.resize(static_cast<std::size_t>(words_));
      b.x.resize(static_cast<std::size_t>(words_));
      const std::uint64_t* nv = adj_[v].data();
      for (int i = 0; i < words_; ++i) {
        b.p[i] = p[i] & nv[i];
        b.x[i] = x[i] & nv[i];
      }
      out.push_back(std::move(b));
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      x[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    return out;
  }

  void run_branch(const Branch& b) {
    clique_.assign(1, b.seed);
    std::copy(b.p.begin(), b.p.end(), level_p(0));
    std::copy(b.x.begin(), b.x.end(), level_x(0));
    recurse(0);
  }

  void run_all() {
    if (n_ == 0) return;
    for (const Branch& b : root_branches()) run_branch(b);
  }

private:
  std::uint64_t* level_p(int d) { return buffer_.data() + static_cast<std::size_t>(2 * d * words_); }
  std::uint64_t* level_x(int d) { return level_p(d) + words_; }

  int choose_pivot(const std::uint64_t* p, const std::uint64_t* x) const {
    int best = -1;
    int best_deg = -1;
    auto consider = [&](int u) {
      const int deg = popcount_and(p, adj_[u].data(), words_);
      if (deg > best_deg || (deg == best_deg && u < best)) {
        best = u;
        best_deg = deg;
      }
    };
    for_each_bit(p, words_, consider);
    for_each_bit(x, words_, consider);
    return best;
  }

  void recurse(int depth) {
    std::uint64_t* p = level_p(depth);
    std::uint64_t* x = level_x(depth);
    if (is_zero(p, words_)) {
      if (is_zero(x, words_)) sink_(clique_);
      return;
    }
    const int pivot = choose_pivot(p, x);
    std::vector<int> candidates;
    const std::uint64_t* np = adj_[pivot].data();
    for (int i = 0; i < words_; ++i) {
      for (std::uint64_t w = p[i] & ~np[i]; w != 0; w &= w - 1) candidates.push_back(i * 64 + std::countr_zero(w));
    }
    std::uint64_t* cp = level_p(depth + 1);
    std::uint64_t* cx = level_x(depth + 1);
    for (int v : candidates) {
      const std::uint64_t* nv = adj_[v].data();
      for (int i = 0; i < words_; ++i) {
        cp[i] = p[i] & nv[i];
        cx[i] = x[i] & nv[i];
      }
      clique_.push_back(v);
      recurse(depth + 1);
      clique_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      x[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }

  const Adjacency& adj_;
  Sink& sink_;
  int n_;
  int words_;
  std::vector<std::uint64_t> buffer_;
  std::vector<int> clique_;
};

struct CollectSink {
  std::vector<std::vector<int>> cliques;
  void operator()(const std::vector<int>& c) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    cliques.push_back(std::move(sorted));
  }
};

struct HistogramSink {
  SizeHistogram sizes;
  void operator()(const std::vector<int>& c) { ++sizes[static_cast<int>(c.size())]; }
};

/// Greedy sequential colouring of P in index order. `order[i]` gets colour
/// `bound[i]`; colours are non-decreasing along `order`.
inline void colour_sort(const Adjacency& adj, const std::vector<std::uint64_t>& p, int words,
                        std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  std::vector<std::uint64_t> uncoloured = p;
  std::vector<std::uint64_t> q(static_cast<std::size_t>(words));
  int colour = 0;
  while (!is_zero(uncoloured.data(), words)) {
    ++colour;
    q = uncoloured;
    while (!is_zero(q.data(), words)) {
      int v = -1;
      for (int i = 0; i < words; ++i) {
        if (q[i] != 0) {
          v = i * 64 + std::countr_zero(q[i]);
          break;
        }
      }
      const std::uint64_t bitv = std::uint64_t{1} << (v & 63);
      uncoloured[v >> 6] &= ~bitv;
      q[v >> 6] &= ~bitv;
      const std::uint64_t* nv = adj[v].data();
      for (int i = 0; i < words; ++i) q[i] &= ~nv[i];
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

/// Bitset branch and bound with colouring bounds (MCQ / BBMC family).
/// `best` may be shared between workers; it is only read for pruning and
/// raised through `offer`.
template <class Offer, class Best>
void expand_max_clique(const Adjacency& adj, int words, std::vector<std::uint64_t> p, std::vector<int>& clique,
                       Best&& best, Offer&& offer) {
  std::vector<int> order;
  std::vector<int> bound;
  colour_sort(adj, p, words, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (static_cast<int>(clique.size()) + bound[i] <= best()) return;
    const int v = order[i];
    clique.push_back(v);
    std::vector<std::uint64_t> np(static_cast<std::size_t>(words));
    const std::uint64_t* nv = adj[v].data();
    for (int w = 0; w < words; ++w) np[w] = p[w] & nv[w];
    if (is_zero(np.data(), words)) {
      offer(clique);
    } else {
      expand_max_clique(adj, words, std::move(np), clique, best, offer);
    }
    clique.pop_back();
    p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
}

}  // namespace wsc::kernels::detail
