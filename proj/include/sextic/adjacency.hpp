#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sextic::curves {

/// Strata of sections, named as SingularitySet::name() prints them.
const std::vector<std::string>& adjacency_nodes();
/// Arrows (from, to): `from` is an immediate degeneration of `to`.
const std::vector<std::pair<std::string, std::string>>& adjacency_arrows();

/// Sources of the arrows into s. Throws std::invalid_argument for a name
/// that is not a node.
std::vector<std::string> immediate_degenerations(const std::string& s);
/// Targets of the arrows out of s.
std::vector<std::string> immediate_generalizations(const std::string& s);
/// `special` is reachable from `general` by following degenerations.
bool degenerates_to(const std::string& general, const std::string& special);

}  // namespace sextic::curves
