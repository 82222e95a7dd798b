// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "umax/constants.hpp"
#include "umax/search.hpp"

namespace umax {

/// Raised when a run's estimated kernel evaluations exceed the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

enum class MethodChoice { BruteForce, CyclicDP, Auto };

std::string_view to_string(MethodChoice method);

inline constexpr double kDefaultBudget = 1e10;
/// Auto picks brute force while C(n, m) stays at or below this.
inline constexpr double kAutoBruteForceLimit = 2e6;

struct ExperimentConfig {
  KernelKind kind = KernelKind::InscribedPerimeter;
  int m = 3;
  int n = 3;
  long long replications = 1;
  std::uint64_t seed = 0;
  MethodChoice method = MethodChoice::Auto;
  int threads = 0;  // 0 = all hardware threads
  double budget = kDefaultBudget;

  /// Throws InvalidInput unless m >= 3, n >= m and replications >= 1.
  void validate() const;
};

/// Method actually used for a config (resolves Auto).
SearchMethod resolve_method(const ExperimentConfig& config);

/// Worst-case kernel evaluations: reps * C(n,m) for brute force,
/// reps * n^3 * m for the DP.
double estimated_evaluations(const ExperimentConfig& config);

/// Normalised extremal statistics n^gamma |M - H_n|, one per replication.
/// Replication r draws its n angles from stream r of the seed, so the output
/// is identical for any thread count and for either search method.
std::vector<double> run_experiment(const ExperimentConfig& config);

/// Angles of replication `replication` (the sample run_experiment uses).
std::vector<double> replication_sample(std::uint64_t seed, std::uint64_t replication,
                                       int n);

struct TailEstimate {
  KernelKind kind = KernelKind::InscribedPerimeter;
  int m = 3;
  double s = 0.0;
  long long trials = 0;
  long long hits = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.99;
  double lemma_ratio = 0.0;   // p_hat * s^{-(m-1)/2}
  double lemma_target = 0.0;  // Gamma(m+1) / K
  std::string warning;        // set when fewer than 10 hits are expected
};

/// Plain Monte Carlo estimate of P{deficit <= s} for m uniform points, with
/// a Wilson interval at `level`. Trial i uses stream i of the seed.
TailEstimate estimate_tail(KernelKind kind, int m, double s, long long trials,
                           std::uint64_t seed, int threads = 0, double level = 0.99);

struct OverlapEstimate {
  KernelKind kind = KernelKind::InscribedPerimeter;
  long long n = 0;
  int m = 3;
  double t = 0.0;
  double z = 0.0;  // threshold z_n(t)
  int r = 1;       // number of shared points
  long long trials = 0;
  long long first_hits = 0;
  long long completions = 1;  // second-kernel draws per first-event hit
  long long joint_hits = 0;
  double p_hat = 0.0;
  double p_ci_low = 0.0;
  double p_ci_high = 0.0;
  double tau_hat = 0.0;
  double lambda_hat = 0.0;
  double lambda_ci_low = 0.0;
  double lambda_ci_high = 0.0;
  double joint_hat = 0.0;
  bool p_zero = false;  // no first-event hits; tau_hat reported as 0
};

/// Estimates p_{n,z}, tau_{n,z}(r) and lambda_{n,z} at z = z_n(t).
///
/// Trial i draws m points from stream i; an exceedance of the first kernel
/// is a first-event hit. Each hit is completed `completions` times with
/// m - r fresh points that join the last r points of the first block, and
/// the second kernel is evaluated on that overlapping block. The first m
/// draws are shared between numerator and denominator, so joint <= p holds
/// on every stream. tau_hat = joint hits / (first hits * completions).
OverlapEstimate estimate_overlap(KernelKind kind, int m, long long n, double t, int r,
                                 long long trials, std::uint64_t seed,
                                 long long completions = 1, int threads = 0);

struct BoundReport {
  long long n = 0;
  int m = 3;
  double z = 0.0;
  double p_hat = 0.0;
  double lambda_hat = 0.0;
  double term_count = 0.0;  // C(n,m) - C(n-m,m)
  std::vector<double> per_r_terms;  // C(m,r) C(n-m,m-r) tau(r), r = 1..m-1
  double bound = 0.0;
  double poisson_approx = 0.0;  // exp(-lambda_hat)
};

/// Right-hand side of the Lao-Mayer Poisson approximation inequality:
///   (1 - e^{-lambda}) { p [C(n,m) - C(n-m,m)] + sum_r C(m,r) C(n-m,m-r) tau(r) }
/// with lambda = C(n,m) p.
BoundReport lao_mayer_bound(long long n, int m, double z, double p_hat,
                            const std::vector<double>& tau_hats);

/// Binomial coefficient as a double; exact through 128-bit integers where
/// the value fits, log-gamma otherwise. Zero when k > n or k < 0.
double binomial(long long n, long long k);

/// log C(n, k); -inf when the coefficient is zero.
double log_binomial(long long n, long long k);

}  // namespace umax
