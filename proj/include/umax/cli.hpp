// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "umax/geometry.hpp"
#include "umax/report.hpp"
#include "umax/simulation.hpp"

namespace umax::cli {

enum class Command { Constants, Simulate, Tail, Bound, Rate, Search, Verify };

std::string_view to_string(Command command);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitBudget = 4;

/// Unknown flags, missing required flags and constraint violations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed command line. Fields a command does not use stay empty.
struct Invocation {
  Command command = Command::Constants;
  std::optional<KernelKind> kind;
  std::optional<int> m;
  std::vector<long long> n;  // a single size, or a list for `rate`
  std::optional<long long> reps;
  std::optional<long long> trials;
  std::optional<double> s;
  std::optional<double> t;
  std::optional<int> r;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = auto
  MethodChoice method = MethodChoice::Auto;
  std::optional<std::string> out;
  Format format = Format::Json;
  std::vector<double> angles;
  long long completions = 1;
  int cap = kDefaultBruteForceCap;

  bool operator==(const Invocation&) const = default;
};

/// Parses `argv` without the program name. Throws UsageError.
Invocation parse_invocation(std::span<const std::string> args);

/// Command line that reproduces `inv` under parse_invocation.
std::vector<std::string> to_argv(const Invocation& inv);

/// Config echo stored in every report.
Json config_echo(const Invocation& inv);

/// Builds the report for an invocation. Budget comes from UMAX_BUDGET when
/// set. Throws InvalidInput, BudgetExceeded.
RunReport execute(const Invocation& inv, double budget);

/// Full CLI entry: parse, run, emit; returns the process exit code.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace umax::cli
