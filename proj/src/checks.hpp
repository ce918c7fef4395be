#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace qtqft {

struct CheckResult {
  std::string name;
  bool pass = false;
  double deviation = 0.0;  // measured; exact checks report violation counts
  double tolerance = 0.0;  // 0 means the check must hold exactly
  std::string detail;
};

enum class CheckSuite { Fast, All };

// Runs the invariant suite. The configured context is added to the per-context
// grids when it is small enough; the cross-context grids are fixed.
std::vector<CheckResult> run_check_suite(CheckSuite suite,
                                         const BoxContext& configured,
                                         std::uint64_t max_entries);

}  // namespace qtqft
