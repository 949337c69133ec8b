#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/pipeline.hpp"

namespace sextic {

/// Keys in the fixed order family, method, pi_order, derived_factors,
/// d10_quotient, notes. pi_order is null for infinite groups.
nlohmann::ordered_json to_json(const FamilyReport& r);
nlohmann::ordered_json to_json(const std::vector<FamilyReport>& rs);

/// Plain-text table, one family per line.
std::string format_report(const FamilyReport& r);

}  // namespace sextic
