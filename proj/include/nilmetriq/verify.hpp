#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace nilmetriq {

// Reference tables compiled into the library (step/CSLA table, Aut0 and Sigma
// placements, isotropy sweep tallies, component group labels).
const nlohmann::json& reference_tables();

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool pass() const { return failures.empty() && checks > 0; }
  // "[PASS] 3 derivation dimensions (40 checks, 0.1 s)" plus the first failures.
  std::string line(std::size_t max_failures = 3) const;
  nlohmann::json to_json() const;
};

constexpr int kCriterionCount = 10;
std::string criterion_title(int id);
// Runs one golden criterion, 1..kCriterionCount. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

}  // namespace nilmetriq
