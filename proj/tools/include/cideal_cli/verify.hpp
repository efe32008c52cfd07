#pragma once

// Cross-route property suites behind `verify-corpus`.

#include <cstddef>
#include <string>
#include <vector>

namespace cideal::cli {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t instances = 0;
  std::string detail;  ///< first failure, if any
};

/// Runs every suite on constellations of at most five points, entries at
/// most three, and the monomial corpus in [0, 8]^2.
std::vector<SuiteResult> run_verification_suites();

}  // namespace cideal::cli
