// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/math/distributions/normal.hpp>

namespace umax {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values)
    : sorted_(std::move(values)) {
  if (sorted_.empty()) throw InvalidInput("empirical distribution needs >= 1 value");
  for (double v : sorted_) {
    if (std::isnan(v)) throw InvalidInput("empirical distribution contains NaN");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::survival(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(sorted_.end() - it) / static_cast<double>(sorted_.size());
}

double ks_statistic(const EmpiricalDistribution& emp,
                    const std::function<double(double)>& cdf) {
  const auto xs = emp.sorted_values();
  const double count = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / count,
                  static_cast<double>(i + 1) / count - f});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_statistic(const EmpiricalDistribution& emp, const LimitLaw& law) {
  return ks_statistic(emp, [&law](double t) { return limit_cdf(law, t); });
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("normal quantile needs p in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

std::pair<double, double> wilson_ci(long long hits, long long trials, double level) {
  if (trials < 1 || hits < 0 || hits > trials) {
    throw InvalidInput("wilson_ci needs 0 <= hits <= trials and trials >= 1");
  }
  if (!(level > 0.0 && level < 1.0)) throw InvalidInput("confidence level must be in (0, 1)");
  const double z = normal_quantile(0.5 + 0.5 * level);
  const double nn = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  double lo = hits == 0 ? 0.0 : std::max(0.0, centre - half);
  double hi = hits == trials ? 1.0 : std::min(1.0, centre + half);
  // Keep the point estimate inside the interval under rounding.
  lo = std::min(lo, p);
  hi = std::max(hi, p);
  return {lo, hi};
}

RateFit rate_fit(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 3) throw InvalidInput("rate_fit needs at least 3 (n, D_n) pairs");
  std::set<double> seen;
  for (const auto& [n, d] : pairs) {
    if (!(n > 0.0)) throw InvalidInput("rate_fit needs positive n");
    if (!(d > 0.0)) throw InvalidInput("rate_fit needs positive D_n");
    if (!seen.insert(n).second) throw InvalidInput("rate_fit needs distinct n");
  }
  const double k = static_cast<double>(pairs.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [n, d] : pairs) {
    mx += std::log(n);
    my += std::log(d);
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [n, d] : pairs) {
    const double dx = std::log(n) - mx;
    const double dy = std::log(d) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  RateFit fit;
  fit.pairs.assign(pairs.begin(), pairs.end());
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  // A constant series is fitted exactly by the flat line.
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

}  // namespace umax
