#include "gbei/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace gbei {

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

Graph Graph::from_rows(int n, const Mask* rows) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) +
                      " outside supported range [1, 32]");
  }
  Graph g;
  g.n_ = n;
  g.active_ = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~g.active_) {
      throw DomainError("adjacency row " + std::to_string(v) +
                        " reaches outside the vertex range");
    }
    if ((rows[v] >> v) & 1U) {
      throw DomainError("loop at vertex " + std::to_string(v));
    }
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < n; ++v) {
    for (int u : VertexSet(g.adj_[v])) {
      if (!g.has_edge(u, v)) {
        throw DomainError("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

int Graph::min_degree() const {
  if (active_ == 0) return 0;
  int best = kMaxVertices;
  for (int v : active()) best = std::min(best, degree(v));
  return best;
}

int Graph::num_edges() const {
  int twice = 0;
  for (int v : active()) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u : active()) {
    for (int v : VertexSet(adj_[u] & ~((Mask{2} << u) - 1))) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without(VertexSet removed) const {
  Graph g = *this;
  g.active_ &= ~removed.bits();
  for (int v = 0; v < n_; ++v) {
    g.adj_[v] = ((g.active_ >> v) & 1U) ? adj_[v] & g.active_ : 0;
  }
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && active_ == other.active_ && adj_ == other.adj_;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) +
                      " outside supported range [1, 32]");
  }
  std::array<Mask, kMaxVertices> rows{};
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") has an endpoint outside [0," +
                        std::to_string(n) + ")");
    }
    if (u == v) {
      throw DomainError("loop edge at vertex " + std::to_string(u));
    }
    rows[u] |= Mask{1} << v;
    rows[v] |= Mask{1} << u;
  }
  return Graph::from_rows(n, rows.data());
}

VertexSet reachable(const Graph& g, int start, VertexSet removed) {
  const Mask alive = g.active().bits() & ~removed.bits();
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int v : VertexSet(frontier)) next |= g.row(v);
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

std::vector<VertexSet> components(const Graph& g, VertexSet t) {
  std::vector<VertexSet> out;
  VertexSet rest = g.active() - t;
  while (!rest.empty()) {
    VertexSet comp = reachable(g, rest.lowest(), t);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

int count_components(const Graph& g, VertexSet t) {
  int count = 0;
  VertexSet rest = g.active() - t;
  while (!rest.empty()) {
    rest -= reachable(g, rest.lowest(), t);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

namespace {

// Calls f on every subset of `pool` with exactly k elements until f returns
// false. Returns false if stopped early.
template <typename F>
bool for_each_subset_of_size(VertexSet pool, int k, F&& f) {
  const std::vector<int> verts = pool.to_vector();
  const int n = static_cast<int>(verts.size());
  if (k > n) return true;
  if (k == 0) return f(VertexSet{});
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s = s.with(verts[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  const int n = g.num_active();
  if (k >= n) return false;
  for (int size = 0; size < k; ++size) {
    bool ok = for_each_subset_of_size(g.active(), size, [&](VertexSet t) {
      return count_components(g, t) == 1;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const Mask all = g.active().bits();
  for (int v : g.active()) {
    if (g.row(v) != (all & ~(Mask{1} << v))) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  Mask colored = 0;
  Mask side = 0;
  for (int s : g.active()) {
    if ((colored >> s) & 1U) continue;
    colored |= Mask{1} << s;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const bool v_side = (side >> v) & 1U;
      for (int u : g.neighbors(v)) {
        if ((colored >> u) & 1U) {
          if (bool((side >> u) & 1U) == v_side) return false;
          continue;
        }
        colored |= Mask{1} << u;
        if (!v_side) side |= Mask{1} << u;
        queue.push_back(u);
      }
    }
  }
  return true;
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) {
    throw DomainError("edge list: missing \"n m\" header");
  }
  if (m < 0) throw DomainError("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw DomainError("edge list: expected " + std::to_string(m) +
                        " edges, got " + std::to_string(i));
    }
    edges.emplace_back(u, v);
  }
  return make_graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ", ";
    os << u << "-" << v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace gbei
