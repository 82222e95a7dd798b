// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace umax {

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in invariant suites packaged for CI: constant identities, form
/// spectrum against a dense eigensolver, sine product, kernel extremality
/// and DP == brute force on random instances.
std::vector<SuiteOutcome> run_invariant_suites(std::uint64_t seed);

}  // namespace umax
