#include "wsc/domains.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wsc {

namespace {

int choose2(int p) { return p * (p - 1) / 2; }

std::uint64_t bit(int element) { return std::uint64_t{1} << (element - 1); }

}  // namespace

int CirclePartition::interval_index(int rotated_element) const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].contains(rotated_element)) return static_cast<int>(i) + 1;
  }
  throw InvalidInput("element " + std::to_string(rotated_element) + " outside [2k]");
}

int CirclePartition::interval_start(int index) const { return intervals.at(index - 1).min(); }

CirclePartition circle_partition(const Subset& a) {
  const int n = a.n();
  if (n % 2 != 0) throw InvalidInput("circle partition needs an even ground set [2k]");
  const int k = n / 2;
  if (a.size() != k) {
    throw InvalidInput("circle partition needs |A| = k = " + std::to_string(k) + ", got " +
                       std::to_string(a.size()));
  }
  CirclePartition p;
  p.k = k;
  Subset rotated = a;
  for (int r = 0; r < n; ++r) {
    rotated = rotate(a, r);
    if (rotated.contains(1) && !rotated.contains(n)) {
      p.offset = r;
      break;
    }
  }
  int start = 1;
  for (int x = 2; x <= n + 1; ++x) {
    if (x == n + 1 || rotated.contains(x) != rotated.contains(start)) {
      p.intervals.push_back(cyclic_interval(start, x - 1, n));
      p.lengths.push_back(x - start);
      start = x;
    }
  }
  p.u = static_cast<int>(p.intervals.size()) / 2;
  return p;
}

bool is_balanced(const CirclePartition& p) {
  // The pairwise condition only needs the two largest lengths.
  std::vector<int> sorted = p.lengths;
  std::sort(sorted.rbegin(), sorted.rend());
  return sorted.size() < 2 || sorted[0] + sorted[1] < p.k;
}

bool is_balanced(const Subset& a) { return is_balanced(circle_partition(a)); }

int sum_pairs(const std::vector<int>& lengths) {
  int s = 0;
  for (int p : lengths) s += choose2(p);
  return s;
}

int PairContext::proj(int x) const {
  auto it = std::lower_bound(support.begin(), support.end(), x);
  if (it == support.end() || *it != x) return 0;
  return static_cast<int>(it - support.begin()) + 1;
}

int PairContext::interval_of(int x) const {
  const int p = proj(x);
  if (p == 0 || !partition) throw InvalidInput("element " + std::to_string(x) + " is not in I △ J");
  const int rotated = (p - 1 + partition->offset) % (2 * k) + 1;
  return partition->interval_index(rotated);
}

PairContext reduce_pair(const Subset& i, const Subset& j) {
  require_same_ground(i, j);
  if (i.size() != j.size()) throw InvalidInput("I and J must have the same cardinality");
  PairContext ctx;
  ctx.i = i;
  ctx.j = j;
  ctx.m = i.size();
  ctx.support = symmetric_difference(i, j).elements();
  ctx.k = static_cast<int>(ctx.support.size()) / 2;
  if (ctx.k == 0) return ctx;
  std::uint64_t reduced = 0;
  for (std::size_t t = 0; t < ctx.support.size(); ++t) {
    if (i.contains(ctx.support[t])) reduced |= std::uint64_t{1} << t;
  }
  ctx.reduced_i = Subset(reduced, 2 * ctx.k);
  ctx.reduced_j = complement(ctx.reduced_i);
  ctx.partition = circle_partition(ctx.reduced_i);
  ctx.balanced = is_balanced(*ctx.partition);
  return ctx;
}

Collection boundary_intervals(int k, int n) {
  if (n < 1 || n > kMaxGround) throw InvalidInput("ground set size must be in [1, 64]");
  if (k < 1 || k > n) throw InvalidInput("boundary intervals need 1 <= k <= n");
  std::vector<Subset> items;
  for (int a = 1; a <= n; ++a) items.push_back(cyclic_interval(a, (a + k - 2) % n + 1, n));
  return Collection(std::move(items));
}

Collection build_domain_AIJ(const Subset& i, const Subset& j) {
  require_same_ground(i, j);
  if (i.size() != j.size()) throw InvalidInput("I and J must have the same cardinality");
  const std::vector<Subset> candidates = k_subsets(i.n(), i.size());
  const std::vector<int> keep = filter_indices(static_cast<int>(candidates.size()), [&](int t) {
    return is_weakly_separated(candidates[t], i) && is_weakly_separated(candidates[t], j);
  });
  std::vector<Subset> items;
  items.reserve(keep.size());
  for (int t : keep) items.push_back(candidates[t]);
  return Collection(std::move(items));
}

int rank_formula(const PairContext& ctx) {
  if (ctx.degenerate()) throw ContractViolation("rank formula needs I != J");
  if (!ctx.balanced) throw ContractViolation("rank formula holds only for balanced pairs");
  const int n = ctx.i.n();
  const int m = ctx.m;
  const int k = ctx.k;
  return m * (n - m) - k * k + 2 * k + sum_pairs(ctx.partition->lengths);
}

DistanceMethod parse_distance_method(std::string_view text) {
  if (text == "exact") return DistanceMethod::exact;
  if (text == "formula") return DistanceMethod::formula;
  throw InvalidInput("unknown distance method '" + std::string(text) + "' (expected exact or formula)");
}

int distance_formula(const PairContext& ctx) {
  if (ctx.degenerate()) return 0;
  const int k = ctx.k;
  return 1 + k * k - 2 * k - sum_pairs(ctx.partition->lengths);
}

ClusterDistance cluster_distance(const Subset& i, const Subset& j, DistanceMethod method) {
  const PairContext ctx = reduce_pair(i, j);
  ClusterDistance d;
  if (method == DistanceMethod::formula) {
    d.value = distance_formula(ctx);
    d.upper_bound = !ctx.degenerate() && !ctx.balanced;
    return d;
  }
  const int n = i.n();
  const int m = ctx.m;
  const CompatGraph g = build_compat_graph(build_domain_AIJ(i, j), Relation::weak);
  d.value = m * (n - m) + 1 - max_clique_size(g);
  return d;
}

Subset lr_subset(const std::vector<int>& labels, int n) {
  std::vector<int> shifted;
  shifted.reserve(labels.size());
  for (int x : labels) {
    if (x < 0 || x > n) throw InvalidInput("LR label " + std::to_string(x) + " outside [0, " + std::to_string(n) + "]");
    shifted.push_back(x + 1);
  }
  return Subset::of(shifted, n + 1);
}

std::vector<int> lr_labels(const Subset& s) {
  std::vector<int> out = s.elements();
  for (int& x : out) --x;
  return out;
}

Collection lr_domain(int n) {
  if (n < 1 || n + 1 > 24) throw InvalidInput("LR domain supports 1 <= n <= 23");
  std::vector<Subset> items;
  const std::uint64_t middle_count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mid = 0; mid < middle_count; ++mid) {
    const std::uint64_t inner = mid << 1;  // labels 1..n-1 sit on bits 1..n-1
    items.emplace_back(inner | bit(1), n + 1);
    items.emplace_back(inner | bit(n + 1), n + 1);
  }
  return Collection(std::move(items));
}

LRChain lr_chain(const Collection& w, int n) {
  const Collection domain = lr_domain(n);
  if (!w.empty() && w.n() != n + 1) throw InvalidInput("collection does not live on the LR ground set");
  if (!is_subcollection(w, domain)) throw InvalidInput("collection is not inside the LR domain");
  if (!is_weakly_separated(w)) throw InvalidInput("collection is not weakly separated");
  if (!is_maximal_in(w, domain)) throw InvalidInput("collection is not maximal in the LR domain");

  // Candidates S with S ∪ {0} and S ∪ {n} both in W, grouped by |S|.
  std::vector<std::vector<Subset>> by_size(static_cast<std::size_t>(n));
  for (const Subset& x : w) {
    if (!x.contains(1)) continue;
    const Subset s = x.without(1);
    if (w.contains(s.with(n + 1)) && s.size() < n) by_size[static_cast<std::size_t>(s.size())].push_back(s);
  }
  LRChain chain;
  for (int m = 0; m < n; ++m) {
    const auto& level = by_size[static_cast<std::size_t>(m)];
    if (level.size() != 1) {
      throw TheoremViolation("LR level " + std::to_string(m) + " has " + std::to_string(level.size()) +
                             " candidate sets instead of exactly one");
    }
    if (!chain.sets.empty() && !is_subset_of(chain.sets.back(), level.front())) {
      throw TheoremViolation("LR chain is not nested at level " + std::to_string(m));
    }
    chain.sets.push_back(level.front());
  }
  return chain;
}

UnbalancedBound unbalanced_witness(const Subset& a) {
  UnbalancedBound ub;
  ub.partition = circle_partition(a);
  const CirclePartition& part = ub.partition;
  const int k = part.k;
  const int n = 2 * k;
  const int u = part.u;
  for (int i = 0; i < u; ++i) {
    ub.a.push_back(part.lengths[2 * i]);
    ub.b.push_back(part.lengths[2 * i + 1]);
  }
  ub.chi.assign(static_cast<std::size_t>(u), std::vector<int>(static_cast<std::size_t>(u), 0));
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < u; ++j) {
      const bool excluded = i == j || i == j - 1 || ub.a[i] + ub.b[j] < k;
      ub.chi[i][j] = excluded ? 0 : 1;
    }
  }

  ub.bound = 2 * k;
  for (int i = 0; i < u; ++i) ub.bound += choose2(ub.a[i]) + choose2(ub.b[i]);
  for (int i = 0; i < u; ++i) {
    for (int j = i + 1; j < u; ++j) ub.bound += (ub.a[i] + ub.b[j] - k + 1) * ub.chi[i][j];
  }

  // Built in rotated coordinates; intervals never wrap there, but the
  // generated sets may.
  std::vector<Subset> sets;
  auto wrap = [n](int x) { return ((x - 1) % n + n) % n + 1; };
  auto span = [&](int from, int to) {
    return to < from ? Subset::empty(n) : cyclic_interval(wrap(from), wrap(to), n);
  };
  for (int idx = 1; idx <= 2 * u; ++idx) {
    const int s = part.interval_start(idx);
    const int p = part.lengths[idx - 1];
    for (int x = s; x < s + p; ++x) {
      for (int y = x + 1; y < s + p; ++y) {
        sets.push_back(set_union(span(x - k + s + p - y, x - 1), span(y, s + p - 1)));
      }
    }
  }
  for (int i = 0; i < u; ++i) {
    for (int j = i + 1; j < u; ++j) {
      if (ub.chi[i][j] == 0) continue;
      const int s = part.interval_start(2 * i + 1);
      const int t = part.interval_start(2 * j + 2);
      for (int x = s; x < s + ub.a[i]; ++x) {
        for (int y = t; y < t + ub.b[j]; ++y) {
          if ((s + ub.a[i] - x) + (t + ub.b[j] - y) != k) continue;
          sets.push_back(set_union(span(x, s + ub.a[i] - 1), span(y, t + ub.b[j] - 1)));
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) sets.push_back(span(i, i + k - 1));

  ub.generated = static_cast<int>(sets.size());
  for (Subset& s : sets) s = rotate(s, -part.offset);
  ub.witness = Collection(std::move(sets));
  return ub;
}

namespace {

// Elements at offsets [from, to] past alpha, as a mask.
std::uint64_t region_mask(int alpha, int from, int to, int n) {
  std::uint64_t m = 0;
  for (int o = from; o <= to; ++o) m |= bit((alpha - 1 + o) % n + 1);
  return m;
}

bool nested_either_way(std::uint64_t i, std::uint64_t j, std::uint64_t r) {
  auto sub = [](std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; };
  return (sub(i, r) && sub(r, j)) || (sub(j, r) && sub(r, i));
}

// Interval index shared by every element of the region in I △ J: 0 when the
// region misses I △ J, -1 when it spans several intervals.
int single_interval(const PairContext& ctx, std::uint64_t region) {
  int found = 0;
  for (std::uint64_t m = region; m != 0; m &= m - 1) {
    const int x = std::countr_zero(m) + 1;
    if (ctx.proj(x) == 0) continue;
    const int idx = ctx.interval_of(x);
    if (found == 0) {
      found = idx;
    } else if (found != idx) {
      return -1;
    }
  }
  return found;
}

struct Offsets {
  int beta = 0;
  int gamma = 0;
  int delta = 0;
};

std::optional<Offsets> offsets_for(int alpha, int beta, int gamma, int delta, int n) {
  Offsets o;
  o.beta = (beta - alpha + n) % n;
  o.gamma = (gamma - alpha + n) % n;
  o.delta = (delta - alpha + n) % n;
  if (o.delta == 0) o.delta = n;
  if (o.beta < 1 || o.gamma < o.beta || o.delta <= o.gamma) return std::nullopt;
  return o;
}

}  // namespace

bool profile_is_valid(const PairContext& ctx, const Subset& r, int alpha, int beta, int gamma, int delta) {
  if (ctx.degenerate()) throw ContractViolation("element profiles need I != J");
  const int n = ctx.i.n();
  for (int x : {alpha, beta, gamma, delta}) {
    if (x < 1 || x > n) return false;
  }
  const auto o = offsets_for(alpha, beta, gamma, delta, n);
  if (!o) return false;
  const std::uint64_t im = ctx.i.mask();
  const std::uint64_t jm = ctx.j.mask();
  const std::uint64_t rm = r.mask();

  const std::uint64_t open_left = region_mask(alpha, 1, o->beta - 1, n);
  const std::uint64_t middle = region_mask(alpha, o->beta, o->gamma, n);
  const std::uint64_t open_right = region_mask(alpha, o->gamma + 1, o->delta - 1, n);
  const std::uint64_t closing = region_mask(alpha, o->delta, n, n);

  if (!nested_either_way(im & open_left, jm & open_left, rm & open_left)) return false;
  if ((rm & middle & ~(im & jm)) != 0) return false;
  if (!nested_either_way(im & open_right, jm & open_right, rm & open_right)) return false;
  if (((im | jm) & closing & ~rm) != 0) return false;
  return single_interval(ctx, open_left) >= 0 && single_interval(ctx, open_right) >= 0;
}

ElementProfile characterize_element(const PairContext& ctx, const Subset& r) {
  if (ctx.degenerate() || !ctx.balanced) throw ContractViolation("element characterization needs a balanced pair");
  require_same_ground(ctx.i, r);
  if (r.size() != ctx.m || !is_weakly_separated(r, ctx.i) || !is_weakly_separated(r, ctx.j)) {
    throw InvalidInput("R = {" + format_subset(r) + "} is not in A_{I,J}");
  }
  const int n = ctx.i.n();
  for (int alpha = 1; alpha <= n; ++alpha) {
    for (int beta = 1; beta <= n; ++beta) {
      for (int gamma = 1; gamma <= n; ++gamma) {
        for (int delta = 1; delta <= n; ++delta) {
          if (!profile_is_valid(ctx, r, alpha, beta, gamma, delta)) continue;
          ElementProfile prof{alpha, beta, gamma, delta, std::nullopt, std::nullopt, {}};
          const auto o = offsets_for(alpha, beta, gamma, delta, n);
          const int left = single_interval(ctx, region_mask(alpha, o->gamma + 1, o->delta - 1, n));
          const int right = single_interval(ctx, region_mask(alpha, 1, o->beta - 1, n));
          if (left > 0) prof.left_endpoint = left;
          if (right > 0) prof.right_endpoint = right;

          const CirclePartition& part = *ctx.partition;
          std::uint64_t proj_r = 0;
          for (int x : ctx.support) {
            if (r.contains(x)) proj_r |= bit((ctx.proj(x) - 1 + part.offset) % (2 * ctx.k) + 1);
          }
          for (int idx = 1; idx <= 2 * part.u; ++idx) {
            if (idx == left || idx == right) continue;
            if ((part.intervals[idx - 1].mask() & ~proj_r) == 0) prof.internal.push_back(idx);
          }
          return prof;
        }
      }
    }
  }
  throw TheoremViolation("no cyclically ordered profile for R = {" + format_subset(r) + "}");
}

std::vector<Subset> chord_chain(const Collection& w, const Subset& u, const Subset& v) {
  require_same_ground(u, v);
  const int n = u.n();
  if (!w.empty() && w.n() != n) throw InvalidInput("W and U, V live on different ground sets");
  if (n < 2) throw InvalidInput("chord chains need n >= 2");
  if (!is_subset_of(u, v)) throw InvalidInput("U must be a subset of V");
  const Subset inner = cyclic_interval(2, n - 1, n);
  if (n == 2 ? !v.is_empty() : !is_subset_of(v, inner)) throw InvalidInput("V must lie inside [2, n-1]");
  if (!is_chord_separated(w)) throw InvalidInput("W is not chord separated");
  if (!is_maximal_in(w, Collection(all_subsets(n)), Relation::chord)) {
    throw InvalidInput("W is not a maximal chord separated collection");
  }
  auto good = [&](const Subset& s) {
    return w.contains(s) && w.contains(s.with(1)) && w.contains(s.with(n)) && w.contains(s.with(1).with(n));
  };
  if (!good(u) || !good(v)) throw InvalidInput("W is missing one of the eight sets built from U and V");

  std::vector<Subset> chain{u};
  const std::vector<int> extra = set_difference(v, u).elements();
  // Depth-first over additions in ascending element order.
  std::function<bool(const Subset&)> extend = [&](const Subset& s) {
    if (s == v) return true;
    for (int x : extra) {
      if (s.contains(x)) continue;
      const Subset next = s.with(x);
      if (!good(next)) continue;
      chain.push_back(next);
      if (extend(next)) return true;
      chain.pop_back();
    }
    return false;
  };
  if (!extend(u)) throw TheoremViolation("no nested chain from U to V inside W");
  return chain;
}

int check_chord_chains(const Collection& w) {
  const int n = w.n();
  if (n < 3) return 0;
  std::vector<Subset> candidates;
  for (const Subset& s : all_subsets(n)) {
    if (s.contains(1) || s.contains(n)) continue;
    if (w.contains(s) && w.contains(s.with(1)) && w.contains(s.with(n)) && w.contains(s.with(1).with(n))) {
      candidates.push_back(s);
    }
  }
  int checked = 0;
  for (const Subset& u : candidates) {
    for (const Subset& v : candidates) {
      if (u == v || !is_subset_of(u, v)) continue;
      const std::vector<Subset> chain = chord_chain(w, u, v);
      if (static_cast<int>(chain.size()) != v.size() - u.size() + 1) {
        throw TheoremViolation("chord chain has the wrong length");
      }
      ++checked;
    }
  }
  return checked;
}

}  // namespace wsc
