#include "sextic/adjacency.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic::curves {

const std::vector<std::string>& adjacency_nodes() {
  static const std::vector<std::string> nodes{
      "4A4",       "4A4+A1",      "4A4+2A1",     "4A4+A2",
      "A9+2A4",    "A9+2A4+A1",   "A9+2A4+A2",   "2A9",
      "Y^1_1,1+2A4", "Y^1_1,1+A9", "W12+2A4"};
  return nodes;
}

const std::vector<std::pair<std::string, std::string>>& adjacency_arrows() {
  static const std::vector<std::pair<std::string, std::string>> arrows{
      {"W12+2A4", "Y^1_1,1+2A4"},
      {"Y^1_1,1+A9", "Y^1_1,1+2A4"},
      {"Y^1_1,1+2A4", "A9+2A4"},
      {"Y^1_1,1+A9", "2A9"},
      {"A9+2A4", "4A4"},
      {"2A9", "A9+2A4"},
      {"4A4+A1", "4A4"},
      {"A9+2A4+A1", "A9+2A4"},
      {"4A4+2A1", "4A4+A1"},
      {"A9+2A4+A1", "4A4+A1"},
      {"4A4+A2", "4A4+A1"},
      {"A9+2A4+A2", "A9+2A4+A1"},
      {"A9+2A4+A2", "4A4+A2"},
  };
  return arrows;
}

namespace {

void require_node(const std::string& s) {
  const auto& n = adjacency_nodes();
  if (std::find(n.begin(), n.end(), s) == n.end())
    throw std::invalid_argument("\"" + s + "\" is not a stratum of the adjacency diagram");
}

}  // namespace

std::vector<std::string> immediate_degenerations(const std::string& s) {
  require_node(s);
  std::vector<std::string> out;
  for (const auto& [from, to] : adjacency_arrows())
    if (to == s) out.push_back(from);
  return out;
}

std::vector<std::string> immediate_generalizations(const std::string& s) {
  require_node(s);
  std::vector<std::string> out;
  for (const auto& [from, to] : adjacency_arrows())
    if (from == s) out.push_back(to);
  return out;
}

bool degenerates_to(const std::string& general, const std::string& special) {
  require_node(general);
  require_node(special);
  std::vector<std::string> todo{general}, seen{general};
  while (!todo.empty()) {
    const std::string cur = todo.back();
    todo.pop_back();
    if (cur == special) return true;
    for (const std::string& d : immediate_degenerations(cur))
      if (std::find(seen.begin(), seen.end(), d) == seen.end()) {
        seen.push_back(d);
        todo.push_back(d);
      }
  }
  return false;
}

}  // namespace sextic::curves
