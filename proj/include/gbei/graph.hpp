#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gbei/vertex_set.hpp"

namespace gbei {

/// Raised for inputs that violate a documented precondition of the domain
/// (out-of-range vertices, disconnected graphs where connectivity is needed,
/// parameters outside a characterized family).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 32 vertices.
///
/// Vertices are 0..order()-1. Deleted vertices are masked out of active()
/// rather than relabeled, so induced subgraphs keep their original labels.
/// Immutable once built.
class Graph {
 public:
  /// Builds the graph on n vertices from per-vertex adjacency rows.
  /// Throws DomainError if the rows are not symmetric, contain loops, or
  /// reach outside {0..n-1}.
  static Graph from_rows(int n, const Mask* rows);

  int order() const { return n_; }
  VertexSet active() const { return VertexSet(active_); }
  int num_active() const { return active().size(); }

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  Mask row(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  /// Minimum degree over active vertices; 0 for an empty vertex set.
  int min_degree() const;
  int num_edges() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// True when active() is exactly {0..n-1}.
  bool is_contiguous() const { return active() == VertexSet::range(n_); }

  /// Induced subgraph on active() - removed, original labels kept.
  Graph without(VertexSet removed) const;

  bool operator==(const Graph& other) const;

 private:
  Graph() = default;

  int n_ = 0;
  Mask active_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

/// Throws DomainError on an out-of-range endpoint, a loop, or n outside
/// [1, 32]. Repeated pairs are merged.
Graph make_graph(int n, const std::vector<Edge>& edges);

/// Connected components of g minus t, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet t = {});

/// c(t): number of components of g minus t, computed without allocation.
int count_components(const Graph& g, VertexSet t = {});

/// Component of g minus removed that contains start.
VertexSet reachable(const Graph& g, int start, VertexSet removed = {});

bool is_connected(const Graph& g);

/// k < n and no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k);

bool is_complete(const Graph& g);
bool is_bipartite(const Graph& g);

/// Reads the edge-list text format: "n m" then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

std::string to_string(const Graph& g);

}  // namespace gbei
