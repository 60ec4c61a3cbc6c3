// Brute-force reference implementations used only by the test suites.
// Nothing here shares code paths with the library beyond Graph itself.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gbei/graph.hpp"

namespace gbei::oracle {

inline int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline int num_pairs(int n) { return n * (n - 1) / 2; }

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> pair_index(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

inline std::uint64_t mask_from_graph(const Graph& g) {
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(u, v);
  return mask;
}

/// Components by recursive DFS over an explicit adjacency matrix.
inline std::vector<std::vector<int>> naive_components(const Graph& g,
                                                      const std::vector<bool>& removed) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || label[s] >= 0) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (!removed[u] && label[u] < 0 && g.has_edge(u, v)) {
          label[u] = label[s];
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

inline int naive_c(const Graph& g, std::uint32_t t) {
  std::vector<bool> removed(g.order());
  for (int v = 0; v < g.order(); ++v) removed[v] = (t >> v) & 1U;
  return static_cast<int>(naive_components(g, removed).size());
}

/// Definitional cutset test on the naive component counter.
inline bool naive_is_cutset(const Graph& g, std::uint32_t t) {
  if (t == 0) return true;
  const int c = naive_c(g, t);
  for (int v = 0; v < g.order(); ++v) {
    if (((t >> v) & 1U) && naive_c(g, t & ~(1U << v)) >= c) return false;
  }
  return true;
}

inline bool naive_k_connected(const Graph& g, int k) {
  const int n = g.order();
  if (k >= n) return false;
  for (std::uint32_t t = 0; t < (1U << n); ++t) {
    if (std::popcount(t) < k && naive_c(g, t) != 1) return false;
  }
  return true;
}

/// (m-1) * sum(n_i - 1) + m|T| from the actual component sizes.
inline int long_form_height(const Graph& g, int m, std::uint32_t t) {
  std::vector<bool> removed(g.order());
  for (int v = 0; v < g.order(); ++v) removed[v] = (t >> v) & 1U;
  int sum = 0;
  for (const auto& comp : naive_components(g, removed)) {
    sum += static_cast<int>(comp.size()) - 1;
  }
  return (m - 1) * sum + m * std::popcount(t);
}

/// Isomorphism classes of all labeled graphs on n <= 7 vertices: each edge
/// mask is mapped to a class id by sweeping masks in order and stamping the
/// whole orbit of every unvisited mask under all n! relabelings.
class OrbitOracle {
 public:
  explicit OrbitOracle(int n) : n_(n) {
    const int pairs = num_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs;
    class_of_.assign(total, -1);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> pair_maps;
    do {
      std::vector<int> map(pairs);
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          map[pair_index(i, j)] = pair_index(perm[i], perm[j]);
        }
      }
      pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (class_of_[mask] >= 0) continue;
      const int id = num_classes_++;
      for (const auto& map : pair_maps) {
        std::uint64_t image = 0;
        for (int p = 0; p < pairs; ++p) {
          if ((mask >> p) & 1U) image |= std::uint64_t{1} << map[p];
        }
        class_of_[image] = id;
      }
      representatives_.push_back(mask);
    }
  }

  int order() const { return n_; }
  int num_classes() const { return num_classes_; }
  int class_of(std::uint64_t mask) const { return class_of_[mask]; }
  const std::vector<std::uint64_t>& representatives() const {
    return representatives_;
  }

  int num_connected_classes() const {
    int count = 0;
    for (std::uint64_t rep : representatives_) {
      if (naive_c(graph_from_mask(n_, rep), 0) == 1) ++count;
    }
    return count;
  }

 private:
  int n_;
  int num_classes_ = 0;
  std::vector<int> class_of_;
  std::vector<std::uint64_t> representatives_;
};

/// Random connected graph on n vertices with edge probability p (retries
/// until connected).
inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::uint64_t mask = 0;
    for (int b = 0; b < num_pairs(n); ++b) {
      if (coin(rng)) mask |= std::uint64_t{1} << b;
    }
    Graph g = graph_from_mask(n, mask);
    if (naive_c(g, 0) == 1) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gbei::oracle
