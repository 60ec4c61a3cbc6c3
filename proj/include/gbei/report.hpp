#pragma once

#include <json.hpp>

#include "gbei/cutset.hpp"
#include "gbei/ideal.hpp"

namespace gbei {

/// {"set": [sorted vertices], "num_components": c, "component_sizes": [...]}
nlohmann::ordered_json to_json(const Cutset& t);

/// Profile fields in declaration order with snake_case keys, verdict as its
/// name, and "cutsets" listing each prime's cutset and height.
nlohmann::ordered_json to_json(const IdealProfile& p);

nlohmann::ordered_json to_json(const DualEmptyReport& r);

}  // namespace gbei
