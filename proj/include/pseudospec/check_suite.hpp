#pragma once

// Seeded fuzz suite over the gap inequalities and the locality sandwich.

#include <cstdint>
#include <string>
#include <vector>

#include "pseudospec/bounds.hpp"

namespace pseudospec {

struct InstanceReport {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int d1 = 0;
  bool hermitian = false;  // B Hermitian and nu real
  std::vector<BoundReport> reports;
};

struct CheckSuiteResult {
  std::vector<InstanceReport> instances;  // sorted by index
  int violations = 0;
  int not_applicable = 0;  // locality reports whose hypothesis K < 1 failed
};

/// Draws `instances` random systems (n <= 6, 1 <= d1 <= 3, complex standard
/// normal entries) from `seed` and runs every bound check on each. Every
/// tenth instance uses a Hermitian B with real nu.
CheckSuiteResult check_suite(std::uint64_t seed, int instances);

/// One line per report plus a summary line; byte-identical for equal input.
std::string format_check_report(const CheckSuiteResult& result);

}  // namespace pseudospec
