#pragma once
// Cross-oracle suites run by `mgh verify`: each check reports a residual
// against an independent construction and passes when it is below its
// threshold.

#include <string>
#include <vector>

namespace mgh {

struct Check {
  std::string suite;
  std::string name;
  double value = 0;
  double threshold = 0;
  bool pass() const { return value < threshold; }
};

// Suites: earthquake, bending, wick, rescaling, flow, blackhole; "all" runs
// every suite. A positive tol replaces every threshold.
const std::vector<std::string>& verify_suites();
std::vector<Check> verify_suite(const std::string& suite, double tol = 0);

}  // namespace mgh
