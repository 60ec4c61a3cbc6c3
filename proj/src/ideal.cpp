#include "gbei/ideal.hpp"

#include <algorithm>

namespace gbei {

namespace {

void require_m(int m) {
  if (m < 2) throw DomainError("m must be at least 2, got " + std::to_string(m));
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph must be connected");
}

int height_of(int n, int m, int t_size, int num_components) {
  return (m - 1) * (n - t_size - num_components) + m * t_size;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CohenMacaulay:
      return "CohenMacaulay";
    case Verdict::NotCohenMacaulay:
      return "NotCohenMacaulay";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

int height_component_prime(const Graph& g, int m, const Cutset& t) {
  require_m(m);
  if (!is_cutset(g, t.set)) {
    throw DomainError(t.set.to_string() + " is not a cutset");
  }
  const int c = count_components(g, t.set);
  return height_of(g.num_active(), m, t.size(), c);
}

int height_empty_plus(int n, int m, int t_size) {
  return t_size * m + (m - 1) * (n - t_size - 1);
}

bool is_unmixed(const Graph& g, int m) {
  return !find_unmixedness_violation(g, m).has_value();
}

bool unmixed_necessary_filters(const Graph& g, int m) {
  if (m < 3) throw DomainError("necessary filters apply for m >= 3");
  if (is_complete(g)) return true;
  if (m >= g.num_active()) return false;
  if (g.min_degree() < m - 1) return false;
  return is_k_connected(g, m - 1);
}

IdealProfile ideal_profile(const Graph& g, int m) {
  require_m(m);
  require_connected(g);
  IdealProfile p;
  p.n = g.num_active();
  p.m = m;
  p.ring_vars = m * p.n;
  p.height_empty = (m - 1) * (p.n - 1);
  p.min_height = p.height_empty;
  p.max_height = p.height_empty;
  for (Cutset& t : enumerate_cutsets(g)) {
    const int h = height_of(p.n, m, t.size(), t.num_components);
    p.min_height = std::min(p.min_height, h);
    p.max_height = std::max(p.max_height, h);
    p.primes.push_back({std::move(t), h});
  }
  p.num_cutsets = static_cast<int>(p.primes.size());
  p.unmixed = p.min_height == p.height_empty && p.max_height == p.height_empty;
  p.dim = p.ring_vars - p.min_height;
  p.verdict = cm_verdict(g, m);
  return p;
}

DualEmptyReport empty_prime_isolation(const Graph& g, int m) {
  require_m(m);
  require_connected(g);
  DualEmptyReport r;
  r.biconnected = is_k_connected(g, 2);
  if (is_complete(g)) {
    r.isolated = true;
    return r;
  }
  const int n = g.num_active();
  const int h_empty = (m - 1) * (n - 1);
  r.isolated = true;
  for (Cutset& t : enumerate_cutsets(g)) {
    if (t.set.empty()) continue;
    const int gap = height_empty_plus(n, m, t.size()) - 1 - h_empty;
    if (gap <= 0) r.isolated = false;
    r.gaps.push_back({std::move(t), gap});
  }
  return r;
}

Verdict cm_verdict(const Graph& g, int m) {
  require_m(m);
  require_connected(g);
  if (is_complete(g)) return Verdict::CohenMacaulay;
  if (m >= 3) return Verdict::NotCohenMacaulay;
  if (is_k_connected(g, 2)) return Verdict::NotCohenMacaulay;
  return Verdict::Undetermined;
}

}  // namespace gbei
