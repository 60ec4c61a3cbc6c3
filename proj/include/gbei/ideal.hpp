#pragma once

#include <string_view>
#include <vector>

#include "gbei/cutset.hpp"
#include "gbei/graph.hpp"

namespace gbei {

// Minimal primes of the generalized binomial edge ideal J_{G,m} in the
// polynomial ring on an m x n matrix of variables, one per cutset T:
// the variables of the columns in T together with the 2-minors on each
// component of G - T. Everything here is computed from closed height
// formulas; no polynomial arithmetic is done.

/// Minimal prime P_T of J_{G,m}.
struct PrimeComponent {
  Cutset cutset;
  int height = 0;
};

enum class Verdict { CohenMacaulay, NotCohenMacaulay, Undetermined };

std::string_view to_string(Verdict v);

struct IdealProfile {
  int n = 0;
  int m = 0;
  int ring_vars = 0;
  /// Height of P_empty, (m-1)(n-1).
  int height_empty = 0;
  int min_height = 0;
  int max_height = 0;
  bool unmixed = false;
  /// Krull dimension of R / J_{G,m}.
  int dim = 0;
  Verdict verdict = Verdict::Undetermined;
  int num_cutsets = 0;
  /// One entry per cutset, in enumeration order.
  std::vector<PrimeComponent> primes;
};

/// Adjacency of P_empty in the dual graph of J_{G,m}.
struct DualEmptyReport {
  struct Gap {
    Cutset cutset;
    /// height(P_empty + P_T) - 1 - height(P_empty)
    int gap = 0;
  };
  bool biconnected = false;
  bool isolated = false;
  std::vector<Gap> gaps;
};

/// (m-1)(n - |T| - c(T)) + m|T|. Throws DomainError if t is not a cutset.
int height_component_prime(const Graph& g, int m, const Cutset& t);

/// height(P_empty + P_T) = m|T| + (m-1)(n - |T| - 1).
int height_empty_plus(int n, int m, int t_size);

bool is_unmixed(const Graph& g, int m);

/// Necessary conditions for unmixedness when m >= 3: complete if m >= n,
/// minimum degree >= m-1, and (m-1)-connected. False means excluded.
bool unmixed_necessary_filters(const Graph& g, int m);

IdealProfile ideal_profile(const Graph& g, int m);

/// For a complete graph the dual graph has one vertex: isolated, no gaps.
DualEmptyReport empty_prime_isolation(const Graph& g, int m);

Verdict cm_verdict(const Graph& g, int m);

}  // namespace gbei
