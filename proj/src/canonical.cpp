#include "gbei/canonical.hpp"

#include <algorithm>
#include <bit>

namespace gbei {

namespace {

// Ordered partition of the vertex set; cells in label-invariant order.
struct Partition {
  std::array<Mask, kMaxVertices> cells{};
  int count = 0;
};

// Splits cells by the number of neighbors each vertex has in a splitter
// cell, smallest count first, until the partition is equitable. Splits
// replace a cell in place, so leading singletons stay in front.
void refine(const Graph& g, Partition& p) {
  std::array<Mask, kMaxVertices + 1> by_count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count && !changed; ++s) {
      const Mask splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const Mask cell = p.cells[c];
        if (std::has_single_bit(cell)) continue;
        int lo = kMaxVertices;
        int hi = 0;
        for (int v : VertexSet(cell)) {
          const int k = std::popcount(g.row(v) & splitter);
          by_count[k] |= Mask{1} << v;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          by_count[lo] = 0;
          continue;
        }
        std::array<Mask, kMaxVertices> parts{};
        int num_parts = 0;
        for (int k = lo; k <= hi; ++k) {
          if (by_count[k]) parts[num_parts++] = by_count[k];
          by_count[k] = 0;
        }
        std::copy_backward(p.cells.begin() + c + 1, p.cells.begin() + p.count,
                           p.cells.begin() + p.count + num_parts - 1);
        std::copy_n(parts.begin(), num_parts, p.cells.begin() + c);
        p.count += num_parts - 1;
        changed = true;
        break;
      }
    }
  }
}

struct Search {
  const Graph& g;
  int n;
  std::array<int, kMaxVertices> order{};
  std::array<Mask, kMaxVertices> cols{};
  std::array<Mask, kMaxVertices> best_cols{};
  std::array<int, kMaxVertices> best_order{};
  bool have_best = false;
  std::uint64_t best_version = 0;

  // Column of position p: adjacency to positions 0..p-1, row 0 most
  // significant, so numeric order equals lexicographic order.
  Mask column(int p) const {
    const int v = order[p];
    Mask col = 0;
    for (int i = 0; i < p; ++i) {
      col = (col << 1) | ((g.row(v) >> order[i]) & 1U);
    }
    return col;
  }

  // `less`: the placed prefix is already smaller than the best leaf's.
  void run(Partition p, int placed, bool less) {
    while (placed < p.count && std::has_single_bit(p.cells[placed])) {
      order[placed] = std::countr_zero(p.cells[placed]);
      cols[placed] = column(placed);
      if (have_best && !less) {
        if (cols[placed] > best_cols[placed]) return;
        if (cols[placed] < best_cols[placed]) less = true;
      }
      ++placed;
    }
    if (placed == n) {
      if (!have_best || less) {
        best_cols = cols;
        best_order = order;
        have_best = true;
        ++best_version;
      }
      return;
    }

    const Mask cell = p.cells[placed];
    Mask tried = 0;
    for (int v : VertexSet(cell)) {
      bool twin = false;
      for (int u : VertexSet(tried)) {
        const Mask bu = Mask{1} << u;
        const Mask bv = Mask{1} << v;
        if ((g.row(u) & ~bv) == (g.row(v) & ~bu)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried |= Mask{1} << v;

      Partition q = p;
      std::copy_backward(q.cells.begin() + placed + 1,
                         q.cells.begin() + q.count,
                         q.cells.begin() + q.count + 1);
      q.cells[placed] = Mask{1} << v;
      q.cells[placed + 1] = cell & ~(Mask{1} << v);
      ++q.count;
      refine(g, q);

      const std::uint64_t version = best_version;
      run(q, placed, less);
      // A new best found below shares this node's prefix.
      if (best_version != version) less = false;
    }
  }
};

}  // namespace

struct CanonicalCertBuilder {
  static CanonicalCert build(int n, const std::array<Mask, kMaxVertices>& cols) {
    CanonicalCert c;
    c.n_ = static_cast<std::uint8_t>(n);
    int b = 0;
    for (int p = 1; p < n; ++p) {
      for (int i = 0; i < p; ++i, ++b) {
        if ((cols[p] >> (p - 1 - i)) & 1U) {
          c.words_[b / 64] |= std::uint64_t{1} << (63 - b % 64);
        }
      }
    }
    return c;
  }
  static CanonicalCert from_small_key(std::uint64_t key) {
    CanonicalCert c;
    c.n_ = static_cast<std::uint8_t>(key & 0x1FF);
    c.words_[0] = key & ~std::uint64_t{0x1FF};
    return c;
  }
};

std::vector<std::uint8_t> CanonicalCert::bytes() const {
  const int nbits = n_ * (n_ - 1) / 2;
  std::vector<std::uint8_t> out(1 + (nbits + 7) / 8, 0);
  out[0] = n_;
  for (int b = 0; b < nbits; ++b) {
    if (bit(b)) out[1 + b / 8] |= static_cast<std::uint8_t>(0x80 >> (b % 8));
  }
  return out;
}

CanonicalCert CanonicalCert::from_small_key(std::uint64_t key) {
  return CanonicalCertBuilder::from_small_key(key);
}

Graph CanonicalCert::graph() const {
  std::array<Mask, kMaxVertices> rows{};
  int b = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if (bit(b)) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
  return Graph::from_rows(n_, rows.data());
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (!g.is_contiguous()) {
    throw DomainError("canonical labeling needs a contiguous labeling");
  }
  const int n = g.order();
  Search search{g, n};
  Partition root;
  root.cells[0] = VertexSet::range(n).bits();
  root.count = 1;
  refine(g, root);
  search.run(root, 0, false);

  CanonicalLabeling out;
  out.cert = CanonicalCertBuilder::build(n, search.best_cols);
  out.position.assign(n, 0);
  for (int p = 0; p < n; ++p) out.position[search.best_order[p]] = p;
  return out;
}

CanonicalCert canonical_cert(const Graph& g) {
  return canonical_labeling(g).cert;
}

Graph relabel(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  if (static_cast<int>(position.size()) != n) {
    throw DomainError("relabel: permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return make_graph(n, edges);
}

std::size_t CanonicalCertHash::operator()(const CanonicalCert& c) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t byte : c.bytes()) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gbei
