#ifndef DP5_CHECKS_HPP
#define DP5_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dp5 {

struct CheckReport {
  std::string id;
  std::string suite;
  std::string claim_ref;  // anchor of the verified claim
  bool pass = false;
  nlohmann::json witness;
};

struct CheckDef {
  std::string id;
  std::string suite;
  std::string claim_ref;
  std::function<void(CheckReport&)> run;
};

const std::vector<CheckDef>& check_registry();
const std::vector<std::string>& suite_names();

// suite == "" runs everything, in registry order.
std::vector<CheckReport> run_checks(const std::string& suite);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace dp5

#endif
