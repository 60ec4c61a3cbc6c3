#include "gbei/circulant.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace gbei {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// {from, ..., from+len-1} reduced mod n.
VertexSet interval(int from, int len, int n) {
  VertexSet s;
  for (int k = 0; k < len; ++k) s = s.with(mod(from + k, n));
  return s;
}

void require_non_complete(int n, int r) {
  if (r < 1 || r > n / 2) {
    throw DomainError("power cycle needs 1 <= r <= n/2, got n=" +
                      std::to_string(n) + " r=" + std::to_string(r));
  }
  if (power_cycle_is_complete(n, r)) {
    throw DomainError("C_" + std::to_string(n) + "(1.." + std::to_string(r) +
                      ") is complete");
  }
}

}  // namespace

int circular_distance(int k, int n) {
  const int a = std::abs(k) % n;
  return std::min(a, n - a);
}

Graph circulant(int n, const std::set<int>& distances) {
  if (n < 3 || n > kMaxVertices) {
    throw DomainError("circulant needs 3 <= n <= 32, got " + std::to_string(n));
  }
  for (int d : distances) {
    if (d < 1 || d > n / 2) {
      throw DomainError("distance " + std::to_string(d) +
                        " outside {1.." + std::to_string(n / 2) + "}");
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distances.contains(circular_distance(j - i, n))) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

Graph power_cycle(int n, int r) {
  if (r < 1 || r > n / 2) {
    throw DomainError("power cycle needs 1 <= r <= n/2, got n=" +
                      std::to_string(n) + " r=" + std::to_string(r));
  }
  std::set<int> d;
  for (int k = 1; k <= r; ++k) d.insert(k);
  return circulant(n, d);
}

bool power_cycle_is_complete(int n, int r) { return r == n / 2; }

bool power_cycle_unmixed(int n, int r, int m) {
  require_non_complete(n, r);
  if (m < 2) throw DomainError("m must be at least 2");
  if (m % 2 == 0) return false;
  return r == (m - 1) / 2 && n >= m + 1 && 2 * n <= 3 * m + 1;
}

Cutset neighborhood_cutset(int n, int r) {
  require_non_complete(n, r);
  const Graph g = power_cycle(n, r);
  return describe_cutset(g, interval(1, r, n) | interval(n - r, r, n));
}

Cutset three_interval_cutset(int n, int r) {
  if (r < 1 || r > n / 2) {
    throw DomainError("power cycle needs 1 <= r <= n/2");
  }
  if (3 * r + 2 >= n) {
    throw DomainError("three-interval cutset needs n > 3r+2; at n = 3r+2 it "
                      "is not a cutset");
  }
  const Graph g = power_cycle(n, r);
  VertexSet t;
  for (int k = 0; k < 3; ++k) t |= interval(k * r + k + 1, r, n);
  return describe_cutset(g, t);
}

std::vector<Cutset> two_interval_cutsets(int n, int r) {
  require_non_complete(n, r);
  const int m = 2 * r + 1;
  const int i = n - m;
  if (i < 1 || i > r + 1) {
    throw DomainError("two-interval family needs m+1 <= n <= 3r+2 with m=2r+1");
  }
  const Graph g = power_cycle(n, r);
  std::vector<Cutset> out;
  for (int j = 1; j <= r + i; ++j) {
    const int q = j <= r + 1 ? i : i - j + r + 1;
    for (int k = 1; k <= q; ++k) {
      out.push_back(
          describe_cutset(g, interval(j, r, n) | interval(r + j + k, r, n)));
    }
  }
  std::unordered_set<Mask> seen;
  for (const Cutset& t : out) {
    if (!seen.insert(t.set.bits()).second) {
      throw std::logic_error("two-interval family repeated " +
                             t.set.to_string());
    }
  }
  return out;
}

}  // namespace gbei
