#include "wsc/collection.hpp"

#include <algorithm>

namespace wsc {

Collection::Collection(std::vector<Subset> items) : items_(std::move(items)) {
  if (!items_.empty()) {
    n_ = items_.front().n();
    for (const Subset& s : items_) {
      if (s.n() != n_) throw InvalidInput("collection mixes subsets of different ground sets");
    }
  }
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Collection Collection::empty(int n) {
  Collection c;
  c.n_ = n;
  return c;
}

bool Collection::contains(const Subset& s) const {
  return std::binary_search(items_.begin(), items_.end(), s);
}

std::ptrdiff_t Collection::index_of(const Subset& s) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), s);
  if (it == items_.end() || *it != s) return -1;
  return it - items_.begin();
}

Collection Collection::with(const Subset& s) const {
  if (n_ != 0 && s.n() != n_) throw InvalidInput("collection mixes subsets of different ground sets");
  if (contains(s)) return *this;
  Collection out = *this;
  out.n_ = s.n();
  out.items_.insert(std::lower_bound(out.items_.begin(), out.items_.end(), s), s);
  return out;
}

Collection Collection::without(const Subset& s) const {
  Collection out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), s);
  if (it != out.items_.end() && *it == s) out.items_.erase(it);
  return out;
}

bool is_subcollection(const Collection& a, const Collection& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_weakly_separated(const Collection& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!is_weakly_separated(c[i], c[j])) return false;
    }
  }
  return true;
}

bool is_weakly_separated_from(const Collection& c, const Subset& s) {
  return std::all_of(c.begin(), c.end(), [&](const Subset& x) { return is_weakly_separated(x, s); });
}

bool is_chord_separated(const Collection& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!is_chord_separated(c[i], c[j])) return false;
    }
  }
  return true;
}

}  // namespace wsc
