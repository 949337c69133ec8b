#include "sextic/report_json.hpp"

namespace sextic {

nlohmann::ordered_json to_json(const FamilyReport& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["method"] = std::string(method_name(r.method));
  j["pi_order"] = r.pi_order ? nlohmann::ordered_json(*r.pi_order) : nlohmann::ordered_json(nullptr);
  j["derived_factors"] = r.derived_factors;
  j["d10_quotient"] = r.d10_quotient;
  j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<FamilyReport>& rs) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const FamilyReport& r : rs) a.push_back(to_json(r));
  return a;
}

std::string format_report(const FamilyReport& r) {
  std::string factors;
  for (const std::string& f : r.derived_factors) factors += (factors.empty() ? "" : ", ") + f;
  std::string s = r.family + "  [" + std::string(method_name(r.method)) + "]  order " +
                  (r.pi_order ? std::to_string(*r.pi_order) : std::string("infinite")) +
                  "  factors " + factors + "  D10 quotient " + (r.d10_quotient ? "yes" : "no");
  if (!r.failed_step.empty()) s += "  FAILED: " + r.failed_step;
  return s;
}

}  // namespace sextic
