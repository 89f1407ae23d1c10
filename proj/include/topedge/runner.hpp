#pragma once

#include <string>

#include "topedge/config.hpp"
#include "topedge/invariants.hpp"

namespace topedge {

// 0 ok, 1 identity mismatch or symmetry violation, 2 usage, 3 numerical failure, 4 I/O.
int exit_code_for(ErrorKind kind);

struct RunOutcome {
  InvariantReport report;
  int exit_code = 0;
  std::string error;
};

// Errors raised by the pipelines are caught and recorded in the outcome.
RunOutcome run(const RunConfig& cfg);

}  // namespace topedge
