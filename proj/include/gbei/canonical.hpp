#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "gbei/graph.hpp"

namespace gbei {

/// Relabeling-invariant certificate: the vertex count followed by the
/// minimal upper-triangle bit string (column order x01, x02, x12, x03, ...)
/// reachable by the refinement search. Two graphs share a certificate iff
/// they are isomorphic.
class CanonicalCert {
 public:
  CanonicalCert() = default;

  int order() const { return n_; }

  /// Bit b of the upper triangle in column order.
  bool bit(int b) const { return (words_[b / 64] >> (63 - b % 64)) & 1U; }

  /// n, then the bit string packed MSB-first and zero-padded to a byte.
  std::vector<std::uint8_t> bytes() const;

  /// Injective 64-bit key, valid for n <= 11.
  std::uint64_t small_key() const { return words_[0] | std::uint64_t(n_); }
  static CanonicalCert from_small_key(std::uint64_t key);

  /// The canonical representative as a graph on {0..n-1}.
  Graph graph() const;

  auto operator<=>(const CanonicalCert&) const = default;

 private:
  friend struct CanonicalCertBuilder;

  std::uint8_t n_ = 0;
  std::array<std::uint64_t, 8> words_{};
};

struct CanonicalLabeling {
  CanonicalCert cert;
  /// position[v]: the label vertex v receives in the canonical graph.
  std::vector<int> position;
};

/// Canonical labeling by ordered-partition refinement plus backtracking over
/// the first non-singleton cell, pruned by comparing partial certificates and
/// by skipping interchangeable twins. Requires a contiguous labeling.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalCert canonical_cert(const Graph& g);

/// g relabeled so that vertex v becomes position[v].
Graph relabel(const Graph& g, const std::vector<int>& position);

struct CanonicalCertHash {
  std::size_t operator()(const CanonicalCert& c) const;
};

}  // namespace gbei
