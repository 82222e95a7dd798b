// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "umax/constants.hpp"

namespace umax {

/// Sorted sample backing a right-continuous empirical CDF.
class EmpiricalDistribution {
 public:
  /// Throws InvalidInput for an empty sample or NaN values.
  explicit EmpiricalDistribution(std::vector<double> values);

  std::span<const double> sorted_values() const { return sorted_; }
  std::size_t count() const { return sorted_.size(); }

  /// Fraction of values <= x.
  double cdf(double x) const;

  /// Fraction of values >= x.
  double survival(double x) const;

 private:
  std::vector<double> sorted_;
};

/// Kolmogorov-Smirnov sup distance between the empirical CDF and a
/// continuous CDF, evaluated exactly at the jump points:
///   max_i max(F(x_i) - i/N, (i+1)/N - F(x_i)),  i = 0..N-1.
double ks_statistic(const EmpiricalDistribution& emp,
                    const std::function<double(double)>& cdf);

double ks_statistic(const EmpiricalDistribution& emp, const LimitLaw& law);

/// Standard normal quantile.
double normal_quantile(double p);

/// Wilson score interval for hits successes out of trials at a two-sided
/// confidence level.
std::pair<double, double> wilson_ci(long long hits, long long trials, double level);

struct RateFit {
  std::vector<std::pair<double, double>> pairs;  // (n, D_n)
  double exponent = 0.0;   // slope of log D_n against log n
  double intercept = 0.0;  // log-scale intercept
  double r_squared = 0.0;
};

/// Least-squares line through (log n, log D_n). Needs at least 3 pairs with
/// distinct n and positive D_n.
RateFit rate_fit(std::span<const std::pair<double, double>> pairs);

}  // namespace umax
