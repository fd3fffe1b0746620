#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wsc {

/// Fixed-capacity bitset over vertex indices 0..size-1.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  int capacity() const { return size_; }
  int word_count() const { return static_cast<int>(words_.size()); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  /// Ascending member indices.
  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wsc
