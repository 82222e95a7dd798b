// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "umax/geometry.hpp"

namespace umax {

enum class SearchMethod { BruteForce, CyclicDP };

std::string_view to_string(SearchMethod method);

/// Extremal kernel value over all m-subsets of a sample.
struct SearchResult {
  /// Max (inscribed) or finite min (circumscribed) kernel value; +inf when
  /// no circumscribed subset is finite.
  double value = 0.0;
  /// Stable |M - value| of the winning subset, from deficit().
  double deficit = 0.0;
  /// Strictly increasing indices into the sorted sample; empty when value
  /// is +inf.
  std::vector<int> subset;
  SearchMethod method = SearchMethod::BruteForce;
};

inline constexpr int kDefaultBruteForceCap = 40;

/// Angles reduced mod 2*pi and sorted ascending; the index space of
/// SearchResult::subset.
std::vector<double> sorted_sample(std::span<const double> angles);

/// Exhaustive enumeration of all C(n, m) subsets of the sorted sample.
/// Refuses n > cap (pass a larger cap explicitly for big oracle runs).
SearchResult umax_bruteforce(KernelKind kind, std::span<const double> angles,
                             int m, int cap = kDefaultBruteForceCap);

/// Anchored cyclic dynamic program over the sorted sample.
///
/// Every kernel is a sum of a per-gap function over the m circular gaps of
/// the chosen subset, so for each anchor (smallest chosen index) the best
/// chain anchor -> ... -> j with k points is a shortest-path recurrence in
/// the linearised gap costs. A greedy near-regular subset seeds an
/// incumbent deficit D; since every gap cost of a better subset is at most
/// D, transitions are restricted to the gap window of D and partial chains
/// costing more than D are dropped. The result equals umax_bruteforce.
SearchResult umax_cyclic_dp(KernelKind kind, std::span<const double> angles,
                            int m);

}  // namespace umax
