#ifndef GRADIG_ACCEPTANCE_HPP
#define GRADIG_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gradig::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;    // what was checked / first failure
  std::string artifact;  // deterministic transcript for the rerun comparison
};

// Runs every criterion; `live`, when given, gets one pass/fail line as each
// criterion finishes.
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream* live = nullptr);

std::string format_result(const CriterionResult& r);
bool all_passed(const std::vector<CriterionResult>& rs);

}  // namespace gradig::acceptance

#endif
