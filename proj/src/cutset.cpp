#include "gbei/cutset.hpp"

#include <array>

namespace gbei {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw DomainError(std::string(what) + " requires a connected graph");
  }
}

// Components of g - t into `out`; returns how many.
int fill_components(const Graph& g, VertexSet t,
                    std::array<Mask, kMaxVertices>& out) {
  int count = 0;
  VertexSet rest = g.active() - t;
  while (!rest.empty()) {
    const VertexSet comp = reachable(g, rest.lowest(), t);
    out[count++] = comp.bits();
    rest -= comp;
  }
  return count;
}

}  // namespace

bool is_cutset(const Graph& g, VertexSet t) {
  if (t.empty()) return true;
  const int c = count_components(g, t);
  for (int v : t) {
    if (count_components(g, t.without(v)) >= c) return false;
  }
  return true;
}

bool is_cutset_fast(const Graph& g, VertexSet t) {
  if (t.empty()) return true;
  std::array<Mask, kMaxVertices> comps;
  const int c = fill_components(g, t, comps);
  if (c < 2) return false;
  for (int v : t) {
    const Mask nb = g.row(v);
    int touched = 0;
    for (int i = 0; i < c && touched < 2; ++i) {
      if (comps[i] & nb) ++touched;
    }
    if (touched < 2) return false;
  }
  return true;
}

Cutset describe_cutset(const Graph& g, VertexSet t) {
  Cutset out;
  out.set = t;
  for (VertexSet comp : components(g, t)) {
    out.component_sizes.push_back(comp.size());
  }
  out.num_components = static_cast<int>(out.component_sizes.size());
  return out;
}

std::vector<Cutset> enumerate_cutsets(const Graph& g) {
  require_connected(g, "cutset enumeration");
  std::vector<Cutset> out;
  for_each_subset_by_size(g.active(), [&](VertexSet t) {
    if (is_cutset_fast(g, t)) out.push_back(describe_cutset(g, t));
    return true;
  });
  return out;
}

std::optional<Cutset> find_unmixedness_violation(const Graph& g, int m) {
  if (m < 2) throw DomainError("m must be at least 2");
  require_connected(g, "the unmixedness test");
  std::optional<Cutset> found;
  for_each_subset_by_size(g.active(), [&](VertexSet t) {
    if (!is_cutset_fast(g, t)) return true;
    const int c = count_components(g, t);
    if (satisfies_unmixed_count(t.size(), c, m)) return true;
    found = describe_cutset(g, t);
    return false;
  });
  return found;
}

}  // namespace gbei
