#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace gbei {

using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 32;

/// Set of vertices of a graph with at most 32 vertices, stored as one word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= Mask{1} << v;
  }

  static constexpr VertexSet single(int v) { return VertexSet(Mask{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.bits_ |= Mask{1} << v;
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (Mask{1} << v));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(Mask{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

}  // namespace gbei
