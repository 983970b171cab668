#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowsim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail{};  // worst observed value vs the pinned gate
  double seconds = 0.0;
};

// Runs the full acceptance matrix. Criteria never throw; failures are
// reported in-band so one broken criterion cannot mask the rest.
std::vector<CriterionResult> run_acceptance();

// One line per criterion plus a summary; returns 0 iff all pass.
int print_acceptance(std::ostream& out);

}  // namespace shadowsim
