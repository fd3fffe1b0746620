#include "wsc/octahedron.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wsc/domains.hpp"

namespace wsc {

namespace {

long long choose(long long n, int r) {
  if (r < 0 || n < r) return 0;
  long long out = 1;
  for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

/// Signs relative to P: d1 <= 0, d2 >= 0, d3 <= 0, d4 >= 0.
bool in_cone(const LatticeVec4& d, bool strict) {
  if (strict) return d[0] < 0 && d[1] > 0 && d[2] < 0 && d[3] > 0;
  return d[0] <= 0 && d[1] >= 0 && d[2] <= 0 && d[3] >= 0;
}

LatticeVec4 scaled(const LatticeVec4& v, int f) { return {{v[0] * f, v[1] * f, v[2] * f, v[3] * f}}; }

}  // namespace

LatticeVec4 operator+(const LatticeVec4& a, const LatticeVec4& b) {
  return {{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
}

LatticeVec4 operator-(const LatticeVec4& a, const LatticeVec4& b) {
  return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}

void require_split(const Split4& split, int n) {
  int total = 0;
  for (int part : split) {
    if (part < 0) throw InvalidInput("split lengths must be non-negative");
    total += part;
  }
  if (total != n) {
    throw InvalidInput("split lengths sum to " + std::to_string(total) + ", not n = " + std::to_string(n));
  }
}

LatticeVec4 phi(const Subset& s, const Split4& split) {
  require_split(split, s.n());
  LatticeVec4 out;
  int start = 1;
  for (int block = 0; block < 4; ++block) {
    const int len = split[static_cast<std::size_t>(block)];
    if (len > 0) out.x[static_cast<std::size_t>(block)] = set_intersection(s, cyclic_interval(start, start + len - 1, s.n())).size();
    start += len;
  }
  return out;
}

std::vector<LatticeVec4> phi(const Collection& c, const Split4& split) {
  require_split(split, c.n());
  std::vector<LatticeVec4> out;
  out.reserve(c.size());
  for (const Subset& s : c) out.push_back(phi(s, split));
  return out;
}

PyramidPosition pyramid_position(const PyramidFrame& frame, const LatticeVec4& v) {
  if (v.level() != frame.apex.level()) throw InvalidInput("pyramid test needs points on the apex level");
  const LatticeVec4 d = scaled(v - frame.apex, frame.orientation);
  if (in_cone(d, true)) return PyramidPosition::interior;
  if (in_cone(d, false)) return PyramidPosition::boundary;
  return PyramidPosition::outside;
}

P4Counts p4_counts(const Subset& a) {
  const CirclePartition part = circle_partition(a);
  if (part.u != 2) {
    throw InvalidInput("lattice counts need a set with exactly four blocks, got " + std::to_string(2 * part.u));
  }
  P4Counts out;
  out.k = part.k;
  for (int t = 0; t < 4; ++t) out.p[static_cast<std::size_t>(t)] = part.lengths[static_cast<std::size_t>(t)];

  // Rotating the blocks by one swaps the roles of A and its complement.
  bool first = true;
  for (int r = 0; r < 4; ++r) {
    std::array<int, 4> q{};
    for (int t = 0; t < 4; ++t) q[static_cast<std::size_t>(t)] = out.p[static_cast<std::size_t>((t + r) % 4)];
    if (q[0] < *std::max_element(q.begin(), q.end())) continue;
    if (first || q > out.normalized) out.normalized = q;
    first = false;
  }
  const auto& q = out.normalized;
  const int k = out.k;

  const LatticeVec4 apex_p{{q[0], 0, q[2], 0}};
  const LatticeVec4 apex_q{{0, q[1], 0, q[3]}};
  const PyramidFrame p_frame{apex_p, 1};
  const PyramidFrame q_frame{apex_q, -1};

  // Every point of P ∩ Q has coordinates in [0, k]; the doubled cell centres
  // lie in [-1, 2k + 1].
  for (int x1 = 0; x1 <= k; ++x1) {
    for (int x2 = 0; x2 <= k - x1; ++x2) {
      for (int x3 = 0; x3 <= k - x1 - x2; ++x3) {
        const LatticeVec4 v{{x1, x2, x3, k - x1 - x2 - x3}};
        const PyramidPosition in_p = pyramid_position(p_frame, v);
        const PyramidPosition in_q = pyramid_position(q_frame, v);
        if (in_p == PyramidPosition::boundary && in_q == PyramidPosition::interior) ++out.z_count;
        if (in_p == PyramidPosition::interior && in_q == PyramidPosition::interior) ++out.integral_interior_pq_count;
      }
    }
  }
  const LatticeVec4 p2 = scaled(apex_p, 2);
  const LatticeVec4 q2 = scaled(apex_q, 2);
  for (int x1 = -1; x1 <= k; ++x1) {
    for (int x2 = -1; x2 <= k; ++x2) {
      for (int x3 = -1; x3 <= k; ++x3) {
        const int x4 = k - x1 - x2 - x3;
        const LatticeVec4 centre = scaled(LatticeVec4{{x1, x2, x3, x4}}, 2) + kShift;
        if (pyramid_position({p2, 1}, centre) == PyramidPosition::interior &&
            pyramid_position({q2, -1}, centre) == PyramidPosition::interior) {
          ++out.interior_pq_count;
        }
      }
    }
  }

  long long pairs = 0;
  for (int len : q) pairs += choose(len, 2);
  out.z_formula = 1LL + static_cast<long long>(k) * k - 2LL * k - pairs;
  out.cuboid_formula = static_cast<long long>(q[1]) * q[2] * q[3] - 2 * choose(q[2] + 1, 3);
  return out;
}

NoInteriorVerdict check_no_interior(const Collection& c, const Split4& split) {
  const std::vector<LatticeVec4> image = phi(c, split);
  NoInteriorVerdict out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i == j || image[i].level() != image[j].level()) continue;
      for (int orientation : {1, -1}) {
        if (pyramid_position({image[j], orientation}, image[i]) == PyramidPosition::interior) {
          out.pass = false;
          out.apex = c[j];
          out.inside = c[i];
          out.orientation = orientation;
          return out;
        }
      }
    }
  }
  return out;
}

ProjectionEffect move_projection_effect(const Collection& c, const SquareMove& m, const Split4& split) {
  apply_square_move(c, m);
  const LatticeVec4 delta = phi(m.to, split) - phi(m.from, split);
  if (delta == kShift) return ProjectionEffect::shift_up;
  if (delta == scaled(kShift, -1)) return ProjectionEffect::shift_down;
  // Point sets, not multisets: phi(from) and phi(to) may already be hit by
  // neighbours of the square.
  std::set<LatticeVec4> before, after;
  for (const Subset& s : c) before.insert(phi(s, split));
  for (const Subset& s : c.without(m.from).with(m.to)) after.insert(phi(s, split));
  return before == after ? ProjectionEffect::unchanged : ProjectionEffect::other;
}

bool in_distinct_blocks(const SquareMove& m, const Split4& split) {
  require_split(split, m.from.n());
  auto block = [&](int e) {
    int end = 0;
    for (int t = 0; t < 4; ++t) {
      end += split[static_cast<std::size_t>(t)];
      if (e <= end) return t;
    }
    return 3;
  };
  std::array<bool, 4> seen{};
  for (int e : {m.a, m.b, m.c, m.d}) {
    if (seen[static_cast<std::size_t>(block(e))]) return false;
    seen[static_cast<std::size_t>(block(e))] = true;
  }
  return true;
}

}  // namespace wsc
