#include "wsc/ground.hpp"

#include <charconv>
#include <sstream>

namespace wsc {

namespace {

void check_ground(int n) {
  if (n < 1 || n > kMaxGround) {
    throw InvalidInput("ground set size must be in [1, 64], got " + std::to_string(n));
  }
}

void check_element(int x, int n) {
  if (x < 1 || x > n) {
    throw InvalidInput("element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
  }
}

constexpr std::uint64_t bit(int element) { return std::uint64_t{1} << (element - 1); }

// Rotates an n-bit mask so that element `base` lands on bit 0.
std::uint64_t rotate_to_base(std::uint64_t mask, int base, int n) {
  const int shift = base - 1;
  if (shift == 0) return mask;
  return ((mask >> shift) | (mask << (n - shift))) & full_mask(n);
}

}  // namespace

Subset::Subset(std::uint64_t mask, int n) : mask_(mask), n_(n) {
  check_ground(n);
  if ((mask & ~full_mask(n)) != 0) {
    throw InvalidInput("subset mask has elements outside [1, " + std::to_string(n) + "]");
  }
}

Subset Subset::of(std::initializer_list<int> elements, int n) {
  return of(std::vector<int>(elements), n);
}

Subset Subset::of(const std::vector<int>& elements, int n) {
  check_ground(n);
  std::uint64_t mask = 0;
  for (int x : elements) {
    check_element(x, n);
    mask |= bit(x);
  }
  return Subset(mask, n);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Subset Subset::with(int element) const {
  check_element(element, n_);
  return Subset(mask_ | bit(element), n_);
}

Subset Subset::without(int element) const {
  check_element(element, n_);
  return Subset(mask_ & ~bit(element), n_);
}

void require_same_ground(const Subset& a, const Subset& b) {
  if (a.n() != b.n()) {
    throw InvalidInput("subsets over different ground sets [" + std::to_string(a.n()) + "] and [" +
                       std::to_string(b.n()) + "]");
  }
}

Subset set_union(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return Subset(a.mask() | b.mask(), a.n());
}

Subset set_intersection(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return Subset(a.mask() & b.mask(), a.n());
}

Subset set_difference(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return Subset(a.mask() & ~b.mask(), a.n());
}

Subset symmetric_difference(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return Subset(a.mask() ^ b.mask(), a.n());
}

bool is_subset_of(const Subset& a, const Subset& b) {
  require_same_ground(a, b);
  return (a.mask() & ~b.mask()) == 0;
}

Subset cyclic_interval(int a, int b, int n) {
  check_ground(n);
  check_element(a, n);
  check_element(b, n);
  const int len = ((b - a) % n + n) % n + 1;
  std::uint64_t mask = 0;
  for (int t = 0; t < len; ++t) mask |= bit((a - 1 + t) % n + 1);
  return Subset(mask, n);
}

bool is_cyclic_interval(const Subset& s) {
  const std::uint64_t m = s.mask();
  const int n = s.n();
  if (m == 0 || m == full_mask(n)) return true;
  // Count run starts: set bits whose cyclic predecessor is clear.
  const std::uint64_t pred = ((m << 1) | (m >> (n - 1))) & full_mask(n);
  return std::popcount(m & ~pred) == 1;
}

bool surrounds(const Subset& i, const Subset& j) {
  require_same_ground(i, j);
  const std::uint64_t outer = i.mask() & ~j.mask();
  const std::uint64_t inner = j.mask() & ~i.mask();
  if (inner == 0 || outer == 0) return true;
  const int lo = std::countr_zero(inner);
  const int hi = 63 - std::countl_zero(inner);
  const std::uint64_t between = full_mask(hi + 1) & ~full_mask(lo);
  return (outer & between) == 0;
}

bool is_weakly_separated(const Subset& s, const Subset& t) {
  require_same_ground(s, t);
  const int a = s.size();
  const int b = t.size();
  return (a <= b && surrounds(s, t)) || (b <= a && surrounds(t, s));
}

bool is_chord_separated(const Subset& s, const Subset& t) {
  require_same_ground(s, t);
  const std::uint64_t only_s = s.mask() & ~t.mask();
  const std::uint64_t only_t = t.mask() & ~s.mask();
  // Walk the circle and count label changes among the labelled positions;
  // chord separated iff the labels form at most two cyclic blocks.
  int first = 0;
  int prev = 0;
  int changes = 0;
  for (int x = 0; x < s.n(); ++x) {
    int label = 0;
    if ((only_s >> x) & 1U) label = 1;
    else if ((only_t >> x) & 1U) label = -1;
    if (label == 0) continue;
    if (first == 0) first = label;
    else if (label != prev) ++changes;
    prev = label;
  }
  if (first != 0 && prev != first) ++changes;
  return changes <= 2;
}

bool gale_leq(const Subset& a, const Subset& b, CyclicOrder order) {
  require_same_ground(a, b);
  const int n = a.n();
  if (order.base < 1 || order.base > n) throw InvalidInput("cyclic order base outside [n]");
  if (a.size() > b.size()) return false;
  std::uint64_t ra = rotate_to_base(a.mask(), order.base, n);
  std::uint64_t rb = rotate_to_base(b.mask(), order.base, n);
  while (ra != 0) {
    if (std::countr_zero(ra) > std::countr_zero(rb)) return false;
    ra &= ra - 1;
    rb &= rb - 1;
  }
  return true;
}

Subset complement(const Subset& s) { return Subset(~s.mask() & full_mask(s.n()), s.n()); }

Subset rotate(const Subset& s, int r) {
  const int n = s.n();
  const int shift = ((r % n) + n) % n;
  if (shift == 0) return s;
  const std::uint64_t m = s.mask();
  return Subset(((m << shift) | (m >> (n - shift))) & full_mask(n), n);
}

bool cyclically_ordered(int a, int b, int c, int d, int n) {
  const auto off = [&](int x) { return ((x - a) % n + n) % n; };
  const int ob = off(b);
  const int oc = off(c);
  const int od = off(d);
  return 0 < ob && ob < oc && oc < od;
}

Subset parse_subset(std::string_view text, int n) {
  check_ground(n);
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      if (end < text.size() || !elements.empty()) throw InvalidInput("empty element in subset list");
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("malformed subset element '" + std::string(token) + "'");
      }
      elements.push_back(value);
    }
    pos = end + 1;
  }
  return Subset::of(elements, n);
}

std::string format_subset(const Subset& s) {
  std::ostringstream out;
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  return out.str();
}

std::vector<Subset> k_subsets(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n) throw InvalidInput("subset size outside [0, n]");
  std::vector<Subset> out;
  if (k == 0) return {Subset::empty(n)};
  if (k == 64) return {Subset::full(n)};
  // Gosper's hack over masks with k bits.
  std::uint64_t m = full_mask(k);
  const std::uint64_t limit = full_mask(n);
  while (true) {
    out.emplace_back(m, n);
    if (m == (limit & ~full_mask(n - k))) break;
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<Subset> all_subsets(int n) {
  check_ground(n);
  if (n > 24) throw InvalidInput("refusing to materialise 2^n subsets for n > 24");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m, n);
  return out;
}

}  // namespace wsc
