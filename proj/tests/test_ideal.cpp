#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbei/circulant.hpp"
#include "gbei/ideal.hpp"
#include "gbei/report.hpp"
#include "oracles.hpp"

using namespace gbei;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

const Graph kC4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

}  // namespace

TEST_CASE("heights of component primes") {
  for (int n = 1; n <= 7; ++n) {
    for (int m = 2; m <= 6; ++m) {
      const Graph k = complete(n);
      CHECK(height_component_prime(k, m, describe_cutset(k, {})) ==
            (m - 1) * (n - 1));
    }
  }
  CHECK(height_component_prime(kC4, 3, describe_cutset(kC4, VertexSet{0, 2})) == 6);

  const Graph c12 = power_cycle(12, 3);
  const Cutset t = three_interval_cutset(12, 3);
  CHECK(height_component_prime(c12, 7, t) == 63);
  CHECK(ideal_profile(c12, 7).height_empty == 66);

  CHECK_THROWS_AS(height_component_prime(kC4, 3, describe_cutset(kC4, VertexSet{0})),
                  DomainError);
  CHECK_THROWS_AS(height_component_prime(kC4, 1, describe_cutset(kC4, {})),
                  DomainError);
}

TEST_CASE("is_unmixed examples") {
  CHECK(is_unmixed(kC4, 3));
  CHECK_FALSE(is_unmixed(kC4, 4));
  CHECK(is_unmixed(power_cycle(8, 2), 5));
  CHECK(is_unmixed(complete(2), 10));
  CHECK_FALSE(is_unmixed(power_cycle(12, 3), 7));
}

TEST_CASE("necessary filters") {
  CHECK(unmixed_necessary_filters(power_cycle(8, 2), 5));
  CHECK_FALSE(unmixed_necessary_filters(power_cycle(8, 1), 5));
  CHECK_FALSE(unmixed_necessary_filters(kC4, 4));
  CHECK_FALSE(unmixed_necessary_filters(kC4, 5));
  CHECK(unmixed_necessary_filters(complete(4), 9));
  CHECK_THROWS_AS(unmixed_necessary_filters(kC4, 2), DomainError);
}

TEST_CASE("ideal profiles") {
  const IdealProfile k4 = ideal_profile(complete(4), 3);
  CHECK(k4.height_empty == 6);
  CHECK(k4.min_height == 6);
  CHECK(k4.max_height == 6);
  CHECK(k4.unmixed);
  CHECK(k4.verdict == Verdict::CohenMacaulay);
  CHECK(k4.ring_vars == 12);
  CHECK(k4.dim == 6);
  CHECK(k4.num_cutsets == 1);

  const IdealProfile c4 = ideal_profile(kC4, 3);
  CHECK(c4.num_cutsets == 3);
  for (const auto& p : c4.primes) CHECK(p.height == 6);
  CHECK(c4.unmixed);
  CHECK(c4.verdict == Verdict::NotCohenMacaulay);

  const IdealProfile c12 = ideal_profile(power_cycle(12, 3), 7);
  CHECK(c12.min_height <= 63);
  CHECK(c12.min_height < 66);
  CHECK_FALSE(c12.unmixed);
  CHECK(c12.dim == 84 - c12.min_height);

  CHECK_THROWS_AS(ideal_profile(make_graph(3, {{0, 1}}), 3), DomainError);
}

TEST_CASE("profile json keys") {
  const auto doc = to_json(ideal_profile(kC4, 3));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "m", "ring_vars", "height_empty",
                                         "min_height", "max_height", "unmixed",
                                         "dim", "verdict", "num_cutsets", "cutsets"});
  CHECK(doc["verdict"] == "NotCohenMacaulay");
  CHECK(doc["cutsets"][1]["set"] == nlohmann::json::array({0, 2}));
  CHECK(doc["cutsets"][1]["height"] == 6);
}

TEST_CASE("isolation of the empty-cutset prime") {
  const DualEmptyReport c4 = empty_prime_isolation(kC4, 3);
  CHECK(c4.biconnected);
  CHECK(c4.isolated);
  REQUIRE(c4.gaps.size() == 2);
  CHECK(c4.gaps[0].cutset.set == VertexSet{0, 2});
  CHECK(c4.gaps[0].gap == 1);
  CHECK(c4.gaps[1].cutset.set == VertexSet{1, 3});
  CHECK(c4.gaps[1].gap == 1);

  const DualEmptyReport c8 = empty_prime_isolation(power_cycle(8, 2), 5);
  CHECK(c8.isolated);
  REQUIRE(c8.gaps.size() == 12);
  for (const auto& g : c8.gaps) CHECK(g.gap == 3);

  const DualEmptyReport p3 = empty_prime_isolation(path(3), 2);
  CHECK_FALSE(p3.biconnected);
  CHECK_FALSE(p3.isolated);
  REQUIRE(p3.gaps.size() == 1);
  CHECK(p3.gaps[0].cutset.set == VertexSet{1});
  CHECK(p3.gaps[0].gap == 0);

  const DualEmptyReport k5 = empty_prime_isolation(complete(5), 3);
  CHECK(k5.isolated);
  CHECK(k5.gaps.empty());
}

TEST_CASE("Cohen-Macaulay verdicts") {
  CHECK(cm_verdict(complete(7), 4) == Verdict::CohenMacaulay);
  CHECK(cm_verdict(complete(3), 2) == Verdict::CohenMacaulay);
  CHECK(cm_verdict(power_cycle(8, 2), 5) == Verdict::NotCohenMacaulay);
  CHECK(cm_verdict(path(4), 2) == Verdict::Undetermined);
  CHECK(cm_verdict(path(4), 3) == Verdict::NotCohenMacaulay);
  CHECK(cm_verdict(power_cycle(5, 1), 2) == Verdict::NotCohenMacaulay);
}

TEST_CASE("profile properties on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = oracle::random_connected(rng, n, 0.3 + 0.1 * (trial % 6));
    const bool biconnected = is_k_connected(g, 2);
    for (int m = 2; m <= 7; ++m) {
      const IdealProfile p = ideal_profile(g, m);
      const bool unmixed = is_unmixed(g, m);
      CHECK(unmixed == p.unmixed);
      for (const PrimeComponent& prime : p.primes) {
        CHECK(prime.height == oracle::long_form_height(g, m, prime.cutset.set.bits()));
        CHECK(prime.height == height_component_prime(g, m, prime.cutset));
        const bool equal_height = prime.height == p.height_empty;
        CHECK(equal_height == satisfies_unmixed_count(prime.cutset.size(),
                                                      prime.cutset.num_components, m));
        if (unmixed && !prime.cutset.set.empty()) {
          CHECK(prime.cutset.size() % (m - 1) == 0);
        }
      }
      if (unmixed && m >= 3) CHECK(unmixed_necessary_filters(g, m));
      if (p.verdict == Verdict::CohenMacaulay) CHECK(p.unmixed);
      if (biconnected && !is_complete(g)) {
        CHECK(empty_prime_isolation(g, m).isolated);
      }
    }
  }
}
