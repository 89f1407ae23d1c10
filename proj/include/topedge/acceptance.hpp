#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace topedge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  int threads = 1;
  std::uint64_t seed = 42;
  std::vector<int> only;  // empty runs every criterion
};

// Prints one line per criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const AcceptanceOptions& opts);

}  // namespace topedge
