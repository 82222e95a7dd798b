// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "umax/rng.hpp"
#include "umax/stats.hpp"

using namespace umax;

TEST_SUITE("stats") {

TEST_CASE("empirical distribution") {
  const EmpiricalDistribution emp({3.0, 1.0, 2.0, 2.0});
  CHECK(emp.count() == 4);
  CHECK(emp.sorted_values()[0] == 1.0);
  CHECK(emp.cdf(0.5) == 0.0);
  CHECK(emp.cdf(2.0) == 0.75);
  CHECK(emp.cdf(3.0) == 1.0);
  CHECK(emp.survival(2.0) == 0.75);
  CHECK(emp.survival(3.5) == 0.0);
  CHECK_THROWS_AS(EmpiricalDistribution({}), InvalidInput);
  CHECK_THROWS_AS(EmpiricalDistribution({1.0, std::nan("")}), InvalidInput);
}

TEST_CASE("ks examples") {
  const EmpiricalDistribution one({0.0});
  CHECK(ks_statistic(one, [](double) { return 0.5; }) == 0.5);

  const LimitLaw law = LimitLaw::make(KernelKind::InscribedPerimeter, 3);
  const int n = 100;
  std::vector<double> grid;
  for (int k = 1; k <= n; ++k) {
    grid.push_back(-law.constant * std::log1p(-static_cast<double>(k) / (n + 1)));
  }
  const double d = ks_statistic(EmpiricalDistribution(grid), law);
  CHECK(d == doctest::Approx(1.0 / 101).epsilon(1e-9));
}

TEST_CASE("ks self-consistency with inverse cdf sampling") {
  const LimitLaw law = LimitLaw::make(KernelKind::InscribedArea, 4);
  StreamRng rng(11, 0);
  std::vector<double> xs(100000);
  const double scale = std::pow(law.constant, 1.0 / law.weibull_exponent);
  for (double& x : xs) {
    x = scale * std::pow(-std::log1p(-rng.uniform()), 1.0 / law.weibull_exponent);
  }
  CHECK(ks_statistic(EmpiricalDistribution(xs), law) < 0.01);
}

TEST_CASE("ks is invariant under monotone relabeling") {
  const LimitLaw law = LimitLaw::make(KernelKind::InscribedPerimeter, 3);
  StreamRng rng(12, 0);
  std::vector<double> xs(500), ys(500);
  for (int i = 0; i < 500; ++i) {
    xs[i] = 20.0 * rng.uniform();
    ys[i] = std::log(xs[i]);
  }
  const double a = ks_statistic(EmpiricalDistribution(xs), law);
  const double b = ks_statistic(EmpiricalDistribution(ys),
                                [&](double y) { return limit_cdf(law, std::exp(y)); });
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK(a <= 1.0);
}

TEST_CASE("wilson interval") {
  CHECK(wilson_ci(0, 100, 0.99).first == 0.0);
  CHECK(wilson_ci(100, 100, 0.99).second == 1.0);
  const auto [lo, hi] = wilson_ci(50, 100, 0.95);
  CHECK(lo == doctest::Approx(0.40380).epsilon(1e-4));
  CHECK(hi == doctest::Approx(0.59620).epsilon(1e-4));
  CHECK(lo + hi == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
  CHECK_THROWS_AS(wilson_ci(5, 4, 0.9), InvalidInput);
  CHECK_THROWS_AS(wilson_ci(1, 4, 1.0), InvalidInput);

  for (double p : {0.01, 0.2, 0.5}) {
    for (long long trials : {1000LL, 100000LL}) {
      const auto hits = static_cast<long long>(p * trials);
      if (hits < 100) continue;  // the z^2/n terms dominate at small counts
      const auto a = wilson_ci(hits, trials, 0.99);
      const auto b = wilson_ci(2 * hits, 2 * trials, 0.99);
      const double ratio = (b.second - b.first) / (a.second - a.first);
      CHECK(ratio >= 0.69);
      CHECK(ratio <= 0.72);
    }
  }
}

TEST_CASE("rate fit") {
  std::vector<std::pair<double, double>> exact;
  for (double n : {25.0, 50.0, 100.0, 200.0}) exact.emplace_back(n, 7.0 * std::pow(n, -0.5));
  const RateFit fit = rate_fit(exact);
  CHECK(std::abs(fit.exponent + 0.5) <= 1e-12);
  CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<std::pair<double, double>> flat{{10, 0.2}, {20, 0.2}, {40, 0.2}};
  const RateFit f2 = rate_fit(flat);
  CHECK(f2.exponent == doctest::Approx(0.0));
  CHECK(f2.r_squared >= 0.0);
  CHECK(f2.r_squared <= 1.0);

  const std::vector<std::pair<double, double>> noisy{{10, 0.3}, {20, 0.25}, {40, 0.1}, {80, 0.12}};
  const RateFit f3 = rate_fit(noisy);
  CHECK(f3.exponent < 0.0);
  CHECK(f3.r_squared > 0.0);
  CHECK(f3.r_squared < 1.0);

  const std::vector<std::pair<double, double>> two{{10, 0.3}, {20, 0.2}};
  CHECK_THROWS_AS(rate_fit(two), InvalidInput);
  const std::vector<std::pair<double, double>> zero{{10, 0.3}, {20, 0.0}, {30, 0.1}};
  CHECK_THROWS_AS(rate_fit(zero), InvalidInput);
  const std::vector<std::pair<double, double>> dup{{10, 0.3}, {10, 0.2}, {30, 0.1}};
  CHECK_THROWS_AS(rate_fit(dup), InvalidInput);
}

}  // TEST_SUITE
