#pragma once

// Projection of collections to the lattice hyperplane x1+x2+x3+x4 = k, the
// pyramids P(v), -P(v), and the lattice counts behind mutation distances of
// four-block complementary pairs.

#include <array>
#include <optional>
#include <vector>

#include "wsc/collection.hpp"
#include "wsc/mutations.hpp"

namespace wsc {

struct LatticeVec4 {
  std::array<int, 4> x{};

  int level() const { return x[0] + x[1] + x[2] + x[3]; }
  int operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

  friend LatticeVec4 operator+(const LatticeVec4& a, const LatticeVec4& b);
  friend LatticeVec4 operator-(const LatticeVec4& a, const LatticeVec4& b);
  friend bool operator==(const LatticeVec4&, const LatticeVec4&) = default;
  friend auto operator<=>(const LatticeVec4&, const LatticeVec4&) = default;
};

/// Consecutive interval lengths (x, y, z, w) cutting [n] into four blocks.
using Split4 = std::array<int, 4>;

/// Throws InvalidInput unless the lengths are non-negative and sum to n.
void require_split(const Split4& split, int n);

/// Sizes of s ∩ [1,x], s ∩ [x+1,x+y], ... for the split.
LatticeVec4 phi(const Subset& s, const Split4& split);
std::vector<LatticeVec4> phi(const Collection& c, const Split4& split);

/// Edge directions of P; -P uses their negatives.
inline constexpr std::array<LatticeVec4, 4> kPyramidEdges = {
    LatticeVec4{{0, 0, -1, 1}}, LatticeVec4{{0, 1, -1, 0}}, LatticeVec4{{-1, 1, 0, 0}}, LatticeVec4{{-1, 0, 0, 1}}};

/// The move direction: phi(S∪{b,d}) - phi(S∪{a,c}) when a, b, c, d sit in
/// the four blocks in order.
inline constexpr LatticeVec4 kShift{{-1, 1, -1, 1}};

struct PyramidFrame {
  LatticeVec4 apex;
  /// +1 for P(apex), -1 for -P(apex).
  int orientation = 1;
};

enum class PyramidPosition { interior, boundary, outside };

/// With d = v - apex (times the orientation), v is in the pyramid iff
/// d1 <= 0, d2 >= 0, d3 <= 0, d4 >= 0, and interior iff all four are strict.
/// Throws InvalidInput when the levels differ.
PyramidPosition pyramid_position(const PyramidFrame& frame, const LatticeVec4& v);

struct P4Counts {
  /// Lengths as found, and after rotating / swapping so p1 is largest.
  std::array<int, 4> p{};
  std::array<int, 4> normalized{};
  int k = 0;
  /// Lattice points on the faces of P(phi(A)) strictly inside -P(phi(Ā)).
  long long z_count = 0;
  long long z_formula = 0;
  /// Unit cells of P ∩ Q: points v + (-1,1,-1,1)/2 strictly inside both.
  long long interior_pq_count = 0;
  /// Integral points strictly inside both, for comparison.
  long long integral_interior_pq_count = 0;
  long long cuboid_formula = 0;

  bool matches() const { return z_count == z_formula && interior_pq_count == cuboid_formula; }
};

/// Throws InvalidInput unless A's circle partition has exactly four blocks.
P4Counts p4_counts(const Subset& a);

struct NoInteriorVerdict {
  bool pass = true;
  /// Apex set J and the set I found strictly inside +-P(phi(J)).
  std::optional<Subset> apex;
  std::optional<Subset> inside;
  int orientation = 0;
};

/// For every pair of equal-size members, phi of one is never interior to
/// P or -P at phi of the other.
NoInteriorVerdict check_no_interior(const Collection& c, const Split4& split);

enum class ProjectionEffect { unchanged, shift_up, shift_down, other };

/// Shift when phi(m.to) - phi(m.from) is ±(-1,1,-1,1), unchanged when the
/// point set phi(c) is the same after the move. Throws InvalidInput if the
/// move is not enabled in c.
ProjectionEffect move_projection_effect(const Collection& c, const SquareMove& m, const Split4& split);

/// True when a, b, c, d lie in four different blocks of the split.
bool in_distinct_blocks(const SquareMove& m, const Split4& split);

}  // namespace wsc
