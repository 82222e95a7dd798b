// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/verify.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "umax/constants.hpp"
#include "umax/rng.hpp"
#include "umax/search.hpp"

namespace umax {
namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

SuiteOutcome constant_identities() {
  double worst = 0.0;
  for (int m = 3; m <= 100; ++m) {
    const double beta = 0.5 * (m - 1);
    const double k1 = limit_constant(KernelKind::InscribedPerimeter, m);
    const double k2 = limit_constant(KernelKind::InscribedArea, m);
    const double k3 = limit_constant(KernelKind::CircumscribedPerimeter, m);
    const double k4 = limit_constant(KernelKind::CircumscribedArea, m);
    worst = std::max(worst, rel_err(k2, std::pow(2.0 * std::cos(M_PI / m), beta) * k1));
    worst = std::max(worst, rel_err(k3, std::pow(2.0, beta) * k4));
  }
  std::ostringstream os;
  os << "max relative error " << worst;
  return {"constant_identities", worst <= 1e-12, os.str()};
}

SuiteOutcome form_spectrum() {
  double worst = 0.0;
  for (int m = 3; m <= 20; ++m) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m - 1, m - 1);
    for (int i = 0; i < m - 1; ++i) {
      b(i, i) = 1.0;
      if (i + 1 < m - 1) b(i, i + 1) = b(i + 1, i) = -0.5;
    }
    const Eigen::VectorXd dense = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b).eigenvalues();
    const std::vector<double> closed = form_eigenvalues(m);
    for (int k = 0; k < m - 1; ++k) worst = std::max(worst, std::abs(dense(k) - closed[k]));
  }
  std::ostringstream os;
  os << "max absolute error " << worst;
  return {"form_spectrum", worst <= 1e-10, os.str()};
}

SuiteOutcome sine_products() {
  double worst = 0.0;
  for (int m = 2; m <= 50; ++m) {
    double direct = 1.0;
    for (int k = 1; k < m; ++k) direct *= std::sin(M_PI * k / (2.0 * m));
    worst = std::max(worst, rel_err(direct, sine_product(m)));
  }
  std::ostringstream os;
  os << "max relative error " << worst;
  return {"sine_product", worst <= 1e-12, os.str()};
}

SuiteOutcome extremality(std::uint64_t seed) {
  long long violations = 0;
  for (int m = 3; m <= 8; ++m) {
    for (KernelKind kind : kAllKinds) {
      const double best = extremal_value(kind, m);
      for (std::uint64_t i = 0; i < 10000; ++i) {
        StreamRng rng(seed, i);
        std::vector<double> angles(m);
        for (double& a : angles) a = rng.angle();
        const double v = kernel_eval(kind, canonicalize(angles));
        const bool ok = orientation(kind) == Orientation::Max ? v <= best + 1e-12
                                                              : v >= best - 1e-12;
        if (!ok) ++violations;
      }
    }
  }
  return {"kernel_extremality", violations == 0,
          std::to_string(violations) + " violations in 240000 samples"};
}

SuiteOutcome dp_matches_bruteforce(std::uint64_t seed) {
  long long mismatches = 0, instances = 0;
  std::uint64_t stream = 0;
  for (KernelKind kind : kAllKinds) {
    for (int i = 0; i < 200; ++i, ++stream) {
      StreamRng rng(seed ^ 0x5eedULL, stream);
      const int n = 6 + static_cast<int>(rng.next_u64() % 7);
      const int m = 3 + static_cast<int>(rng.next_u64() % 3);
      std::vector<double> angles(n);
      for (double& a : angles) a = rng.angle();
      const SearchResult bf = umax_bruteforce(kind, angles, m);
      const SearchResult dp = umax_cyclic_dp(kind, angles, m);
      ++instances;
      const bool both_inf = std::isinf(bf.value) && std::isinf(dp.value);
      if (!both_inf && !(std::abs(bf.value - dp.value) <= 1e-12)) ++mismatches;
    }
  }
  return {"dp_equals_bruteforce", mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(instances) +
              " instances"};
}

}  // namespace

std::vector<SuiteOutcome> run_invariant_suites(std::uint64_t seed) {
  return {constant_identities(), form_spectrum(), sine_products(), extremality(seed),
          dp_matches_bruteforce(seed)};
}

}  // namespace umax
