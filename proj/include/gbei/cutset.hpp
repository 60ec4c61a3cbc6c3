#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "gbei/graph.hpp"

namespace gbei {

/// A member T of C(G): T is empty, or putting back any single vertex of T
/// strictly lowers the number of components of G minus T.
struct Cutset {
  VertexSet set;
  int num_components = 0;
  /// Sizes of the components of G minus T, ordered by smallest vertex.
  std::vector<int> component_sizes;

  int size() const { return set.size(); }

  bool operator==(const Cutset&) const = default;
};

/// Definitional test: t is empty, or c(t - v) < c(t) for every v in t.
bool is_cutset(const Graph& g, VertexSet t);

/// Equivalent local test: t is empty, or every v in t is adjacent to at
/// least two distinct components of g minus t.
bool is_cutset_fast(const Graph& g, VertexSet t);

/// Fills in c(t) and the component sizes for t. Does not check membership.
Cutset describe_cutset(const Graph& g, VertexSet t);

/// Every subset of pool, ordered by size and then by mask value.
/// Stops when f returns false; returns false in that case.
template <typename F>
bool for_each_subset_by_size(VertexSet pool, F&& f);

/// All of C(g), the empty set first, ordered by size then mask value.
/// Requires g connected.
std::vector<Cutset> enumerate_cutsets(const Graph& g);

/// First cutset (same order) with c(T) != |T|/(m-1) + 1, taken over the
/// integers so that (m-1) must divide |T|. Requires g connected, m >= 2.
std::optional<Cutset> find_unmixedness_violation(const Graph& g, int m);

/// c(T) == |T|/(m-1) + 1 with exact divisibility.
constexpr bool satisfies_unmixed_count(int size, int num_components, int m) {
  return size % (m - 1) == 0 && num_components == size / (m - 1) + 1;
}

// ---------------------------------------------------------------------------

template <typename F>
bool for_each_subset_by_size(VertexSet pool, F&& f) {
  const std::vector<int> verts = pool.to_vector();
  const int n = static_cast<int>(verts.size());
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (!f(VertexSet{})) return false;
      continue;
    }
    // Gosper's hack walks k-subsets of index space in increasing numeric
    // order; scattering through the sorted vertex list preserves it.
    std::uint64_t idx = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (idx < limit) {
      Mask bits = 0;
      for (std::uint64_t rest = idx; rest; rest &= rest - 1) {
        bits |= Mask{1} << verts[std::countr_zero(rest)];
      }
      if (!f(VertexSet(bits))) return false;
      const std::uint64_t low = idx & (~idx + 1);
      const std::uint64_t ripple = idx + low;
      idx = (((ripple ^ idx) >> 2) / low) | ripple;
    }
  }
  return true;
}

}  // namespace gbei
