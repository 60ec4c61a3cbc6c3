#include "gbei/report.hpp"

namespace gbei {

nlohmann::ordered_json to_json(const Cutset& t) {
  return {{"set", t.set.to_vector()},
          {"num_components", t.num_components},
          {"component_sizes", t.component_sizes}};
}

nlohmann::ordered_json to_json(const IdealProfile& p) {
  nlohmann::ordered_json cutsets = nlohmann::ordered_json::array();
  for (const PrimeComponent& prime : p.primes) {
    auto entry = to_json(prime.cutset);
    entry["height"] = prime.height;
    cutsets.push_back(std::move(entry));
  }
  return {{"n", p.n},
          {"m", p.m},
          {"ring_vars", p.ring_vars},
          {"height_empty", p.height_empty},
          {"min_height", p.min_height},
          {"max_height", p.max_height},
          {"unmixed", p.unmixed},
          {"dim", p.dim},
          {"verdict", std::string(to_string(p.verdict))},
          {"num_cutsets", p.num_cutsets},
          {"cutsets", std::move(cutsets)}};
}

nlohmann::ordered_json to_json(const DualEmptyReport& r) {
  nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
  for (const auto& g : r.gaps) {
    gaps.push_back({{"set", g.cutset.set.to_vector()}, {"gap", g.gap}});
  }
  return {{"biconnected", r.biconnected},
          {"isolated", r.isolated},
          {"gaps", std::move(gaps)}};
}

}  // namespace gbei
