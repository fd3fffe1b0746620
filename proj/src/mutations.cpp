#include "wsc/mutations.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "wsc/cliques.hpp"
#include "wsc/kernels.hpp"

namespace wsc {

namespace {

using Mask = std::uint64_t;

Mask bit(int e) { return Mask{1} << (e - 1); }

bool has(const Mask* begin, const Mask* end, Mask m) { return std::binary_search(begin, end, m); }

/// Moves enabled in a sorted, k-uniform mask array. No maximality check.
std::vector<SquareMove> detect_moves(const Mask* m, std::size_t size, int n) {
  std::vector<SquareMove> out;
  const Mask* end = m + size;
  for (std::size_t t = 0; t < size; ++t) {
    const Mask x = m[t];
    if (std::popcount(x) < 2) continue;
    for (int a = 1; a <= n; ++a) {
      if (!(x & bit(a))) continue;
      for (int c = a + 1; c <= n; ++c) {
        if (!(x & bit(c))) continue;
        const Mask s = x & ~bit(a) & ~bit(c);
        for (int b = a + 1; b < c; ++b) {
          if ((x & bit(b)) || !has(m, end, s | bit(a) | bit(b)) || !has(m, end, s | bit(b) | bit(c))) continue;
          for (int d = 1; d <= n; ++d) {
            if ((d >= a && d <= c) || (x & bit(d))) continue;
            if (!has(m, end, s | bit(c) | bit(d)) || !has(m, end, s | bit(d) | bit(a))) continue;
            SquareMove mv;
            mv.s = Subset(s, n);
            mv.a = a;
            mv.b = b;
            mv.c = c;
            mv.d = d;
            mv.from = Subset(x, n);
            mv.to = Subset(s | bit(b) | bit(d), n);
            if (!has(m, end, mv.to.mask())) out.push_back(mv);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> masks_of(const Collection& c) {
  std::vector<Mask> out;
  out.reserve(c.size());
  for (const Subset& s : c) out.push_back(s.mask());
  return out;
}

int uniform_size(const Collection& c) {
  if (c.empty()) throw ContractViolation("square moves need a non-empty collection");
  const int k = c[0].size();
  for (const Subset& s : c) {
    if (s.size() != k) throw ContractViolation("square moves need a collection of k-subsets");
  }
  return k;
}

void require_maximal(const Collection& c) {
  const int k = uniform_size(c);
  const int n = c.n();
  if (static_cast<int>(c.size()) != k * (n - k) + 1 || !is_weakly_separated(c)) {
    throw ContractViolation("square moves need a maximal weakly separated collection");
  }
}

std::uint64_t fnv1a(const Mask* m, std::size_t size) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t t = 0; t < size; ++t) {
    Mask v = m[t];
    for (int byte = 0; byte < 8; ++byte) {
      h ^= v & 0xff;
      h *= 1099511628211ULL;
      v >>= 8;
    }
  }
  return h;
}

/// Nodes are stored back to back as sorted mask arrays of one fixed width.
class NodeStore {
public:
  explicit NodeStore(std::size_t width) : width_(width) {}

  std::size_t size() const { return count_; }
  const Mask* data(int id) const { return masks_.data() + static_cast<std::size_t>(id) * width_; }
  std::size_t width() const { return width_; }

  /// Id of the node, or -1.
  int find(const Mask* m) const {
    auto [lo, hi] = index_.equal_range(fnv1a(m, width_));
    for (auto it = lo; it != hi; ++it) {
      if (std::equal(m, m + width_, data(it->second))) return it->second;
    }
    return -1;
  }

  int insert(const Mask* m) {
    const int id = static_cast<int>(count_++);
    masks_.insert(masks_.end(), m, m + width_);
    index_.emplace(fnv1a(m, width_), id);
    return id;
  }

  Collection collection(int id, int n) const {
    std::vector<Subset> items;
    for (std::size_t t = 0; t < width_; ++t) items.emplace_back(data(id)[t], n);
    return Collection(std::move(items));
  }

private:
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Mask> masks_;
  std::unordered_multimap<std::uint64_t, int> index_;
};

std::vector<Mask> apply_to_masks(const Mask* m, std::size_t width, const SquareMove& mv) {
  std::vector<Mask> out(m, m + width);
  *std::lower_bound(out.begin(), out.end(), mv.from.mask()) = mv.to.mask();
  std::sort(out.begin(), out.end());
  return out;
}

/// Layered breadth-first closure under square moves. Moves of one layer are
/// computed in parallel, nodes are numbered serially in discovery order.
struct Explorer {
  int n = 0;
  std::size_t budget = 0;
  const std::optional<Collection>* domain = nullptr;
  NodeStore store;
  std::vector<std::vector<int>> adj;
  bool complete = true;
  std::size_t edges = 0;

  Explorer(int n_, std::size_t width, std::size_t budget_, const std::optional<Collection>* domain_)
      : n(n_), budget(budget_), domain(domain_), store(width) {}

  std::vector<SquareMove> moves(int id) const {
    std::vector<SquareMove> mv = detect_moves(store.data(id), store.width(), n);
    if (domain != nullptr && domain->has_value()) {
      const Collection& d = **domain;
      const Mask* m = store.data(id);
      std::erase_if(mv, [&](const SquareMove& x) {
        if (!d.contains(x.to)) return true;
        for (std::size_t t = 0; t < store.width(); ++t) {
          if (m[t] != x.from.mask() && !is_weakly_separated(Subset(m[t], n), x.to)) return true;
        }
        return false;
      });
    }
    return mv;
  }

  void add_edge(int u, int v) {
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++edges;
  }

  void run(const std::vector<Mask>& seed) {
    if (budget == 0) {
      complete = false;
      return;
    }
    store.insert(seed.data());
    adj.emplace_back();
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::vector<SquareMove>> found(frontier.size());
      for_each_index(static_cast<int>(frontier.size()), [&](int t) { found[t] = moves(frontier[t]); });
      std::vector<int> next;
      for (std::size_t t = 0; t < frontier.size(); ++t) {
        const int u = frontier[t];
        for (const SquareMove& mv : found[t]) {
          const std::vector<Mask> nb = apply_to_masks(store.data(u), store.width(), mv);
          int v = store.find(nb.data());
          if (v < 0) {
            if (store.size() >= budget) {
              complete = false;
              continue;
            }
            v = store.insert(nb.data());
            adj.emplace_back();
            next.push_back(v);
          }
          add_edge(u, v);
        }
      }
      frontier = std::move(next);
    }
  }
};

bool node_contains(const NodeStore& store, int id, Mask m) {
  return has(store.data(id), store.data(id) + store.width(), m);
}

}  // namespace

SquareMove SquareMove::reversed() const {
  SquareMove r;
  r.s = s;
  r.from = to;
  r.to = from;
  // b < c and d outside [a, c]: relabel so that the new a is the smaller of b, d.
  if (b < d) {
    r.a = b;
    r.b = c;
    r.c = d;
    r.d = a;
  } else {
    r.a = d;
    r.b = a;
    r.c = b;
    r.d = c;
  }
  return r;
}

bool operator<(const SquareMove& x, const SquareMove& y) {
  if (x.from.mask() != y.from.mask()) return x.from.mask() < y.from.mask();
  return x.to.mask() < y.to.mask();
}

std::vector<SquareMove> find_square_moves(const Collection& c) {
  require_maximal(c);
  const std::vector<Mask> m = masks_of(c);
  return detect_moves(m.data(), m.size(), c.n());
}

Collection apply_square_move(const Collection& c, const SquareMove& m) {
  const int n = c.n();
  auto sab = [&](int x, int y) { return Subset(m.s.mask() | bit(x) | bit(y), n); };
  const bool enabled = m.from.n() == n && c.contains(m.from) && !c.contains(m.to) && c.contains(sab(m.a, m.b)) &&
                       c.contains(sab(m.b, m.c)) && c.contains(sab(m.c, m.d)) && c.contains(sab(m.d, m.a)) &&
                       m.from == sab(m.a, m.c) && m.to == sab(m.b, m.d) &&
                       cyclically_ordered(m.a, m.b, m.c, m.d, n);
  if (!enabled) throw InvalidInput("square move " + format_subset(m.from) + " -> " + format_subset(m.to) +
                                   " is not enabled in this collection");
  Collection out = c.without(m.from).with(m.to);
  assert(is_weakly_separated(out));
  return out;
}

MutationGraphSummary explore_mutation_graph(const Collection& seed, const ExploreOptions& options) {
  if (options.domain) {
    uniform_size(seed);
    if (!is_subcollection(seed, *options.domain) || !is_weakly_separated(seed)) {
      throw ContractViolation("restricted exploration needs a weakly separated seed inside the domain");
    }
  } else {
    require_maximal(seed);
  }
  Explorer ex(seed.n(), seed.size(), options.budget, &options.domain);
  ex.run(masks_of(seed));
  MutationGraphSummary out;
  out.node_count = ex.store.size();
  out.edge_count = ex.edges;
  out.complete = ex.complete;
  if (options.keep_nodes) {
    for (std::size_t id = 0; id < ex.store.size(); ++id) out.nodes.push_back(ex.store.collection(static_cast<int>(id), seed.n()));
  }
  return out;
}

DistanceResult mutation_distance(const Subset& i, const Subset& j, const DistanceOptions& options) {
  require_same_ground(i, j);
  if (i.size() != j.size()) throw InvalidInput("mutation distance needs |I| = |J|");
  const int n = i.n();
  const int k = i.size();
  if (k * (n - k) > kLargeGridArea && !options.allow_large) {
    throw InvalidInput("mutation distance for k(n-k) = " + std::to_string(k * (n - k)) +
                       " is gated; enable the large-case option");
  }
  const Collection grid(k_subsets(n, k));

  DistanceResult out;
  if (is_weakly_separated(i, j)) {
    out.distance = 0;
    out.source = complete_to_maximal(Collection({i, j}), grid, Relation::weak);
    out.target = out.source;
    out.nodes_explored = 1;
    return out;
  }

  const Collection seed = complete_to_maximal(Collection({i}), grid, Relation::weak);
  Explorer ex(n, seed.size(), options.budget, nullptr);
  ex.run(masks_of(seed));
  out.nodes_explored = ex.store.size();
  const int count = static_cast<int>(ex.store.size());

  // Distances to the nearest node containing J.
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(count), kUnreached);
  std::deque<int> queue;
  for (int v = 0; v < count; ++v) {
    if (node_contains(ex.store, v, j.mask())) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : ex.adj[u]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }

  int best = kUnreached;
  int start = -1;
  for (int v = 0; v < count; ++v) {
    if (!node_contains(ex.store, v, i.mask()) || dist[v] == kUnreached) continue;
    if (dist[v] < best) {
      best = dist[v];
      start = v;
    } else if (dist[v] == best) {
      const Mask* a = ex.store.data(v);
      const Mask* b = ex.store.data(start);
      if (std::lexicographical_compare(a, a + ex.store.width(), b, b + ex.store.width())) start = v;
    }
  }
  if (start < 0) return out;

  out.source = ex.store.collection(start, n);
  int cur = start;
  while (dist[cur] > 0) {
    for (const SquareMove& mv : ex.moves(cur)) {
      const std::vector<Mask> nb = apply_to_masks(ex.store.data(cur), ex.store.width(), mv);
      const int v = ex.store.find(nb.data());
      if (v >= 0 && dist[v] == dist[cur] - 1) {
        out.path.push_back(mv);
        cur = v;
        break;
      }
    }
  }
  out.target = ex.store.collection(cur, n);
  if (ex.complete) {
    out.distance = best;
  } else {
    out.upper_bound = best;
  }
  return out;
}

}  // namespace wsc
