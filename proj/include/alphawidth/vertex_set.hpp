#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace alphawidth {

/// Hard capacity of every graph in the library. The largest graph the
/// constructions produce is S_5 with 241 vertices.
inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    s.words_[0] = mask;
    return s;
  }
  /// {0, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Smallest element, or -1.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }
  /// Smallest element strictly greater than v, or -1.
  int next(int v) const;
  /// Largest element, or -1.
  int last() const {
    for (int i = kWords - 1; i >= 0; --i)
      if (words_[i]) return i * 64 + 63 - std::countl_zero(words_[i]);
    return -1;
  }

  /// Low 64 bits; only meaningful when every element is < 64.
  std::uint64_t low_mask() const { return words_[0]; }
  bool fits_in_mask() const {
    for (int i = 1; i < kWords; ++i)
      if (words_[i]) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::vector<int> to_vector() const;
  std::size_t hash() const;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Order on vertex sets used for witness tie-breaking: compares the sorted
/// element lists lexicographically ({0,5} < {1,2}, {0} < {0,5}).
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace alphawidth

template <>
struct std::hash<alphawidth::VertexSet> {
  std::size_t operator()(const alphawidth::VertexSet& s) const noexcept { return s.hash(); }
};
