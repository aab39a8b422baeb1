#pragma once

#include <string>
#include <vector>

#include "annulus/config.hpp"
#include "annulus/json_io.hpp"

namespace annulus {

enum class Cmp { le, ge };

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Cmp cmp = Cmp::le;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  RunConfig config;
  std::vector<CheckResult> cases;  // sorted by name
  bool pass = false;
};

// Runs the invariant checks of the named module group against the fixture
// families. suite is one of "welding", "semigroup", "charts", "all".
// Solver failures (non-convergence, aliasing) propagate as exceptions;
// assertion failures are recorded as failing cases.
VerifyReport run_verify(const RunConfig& cfg, const std::string& suite);

Json report_to_json(const VerifyReport& r);
std::string report_human(const VerifyReport& r);

}  // namespace annulus
