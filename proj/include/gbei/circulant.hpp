#pragma once

#include <set>
#include <vector>

#include "gbei/cutset.hpp"
#include "gbei/graph.hpp"

namespace gbei {

/// Circular distance |k|_n = min(|k|, n - |k|) for k reduced mod n.
int circular_distance(int k, int n);

/// C_n(S): vertices Z_n, {i, j} an edge iff |j - i|_n is in distances.
/// Requires 3 <= n <= 32 and distances within {1, ..., floor(n/2)}.
Graph circulant(int n, const std::set<int>& distances);

/// r-th power of the n-cycle, C_n(1, ..., r). Requires 1 <= r <= floor(n/2).
Graph power_cycle(int n, int r);

/// C_n(1..r) is complete exactly when r == floor(n/2).
bool power_cycle_is_complete(int n, int r);

/// Closed-form unmixedness of J_{G,m} for the non-complete power cycle
/// G = C_n(1..r): m odd, r = (m-1)/2 and m+1 <= n <= (3m+1)/2.
/// Throws DomainError for a complete power cycle.
bool power_cycle_unmixed(int n, int r, int m);

/// The neighborhood S = N(0) = {1..r} u {n-r..n-1} of a non-complete power
/// cycle. A cutset with exactly two components, {0} and {r+1..n-r-1}.
Cutset neighborhood_cutset(int n, int r);

/// {1..r} u {r+2..2r+1} u {2r+3..3r+2}: a 3r-element cutset leaving three
/// components (r+1, 2r+2, and the rest). Requires n > 3r+2.
Cutset three_interval_cutset(int n, int r);

/// The two-interval cutsets {j..r+j-1} u {r+j+k..2r+j+k-1} (mod n) for the
/// power cycles with m = 2r+1 and n = m+i, 1 <= i <= r+1. The ranges
/// j = 1..r+i, k = 1..q with q = i for j <= r+1 and i-j+r+1 beyond list
/// every nonempty cutset exactly once, n*i/2 of them.
std::vector<Cutset> two_interval_cutsets(int n, int r);

}  // namespace gbei
