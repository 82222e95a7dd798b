// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "umax/rng.hpp"
#include "umax/stats.hpp"

namespace umax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-trial deficit evaluator with a cheap window pre-check: a configuration
// with a gap outside the window of s cannot have deficit <= s.
class DeficitProbe {
 public:
  DeficitProbe(KernelKind kind, int m, double s)
      : kind_(kind), m_(m), window_(gap_window(kind, m, s)),
        angles_(m), gaps_(m) {}

  std::vector<double>& angles() { return angles_; }

  /// Deficit of the current angles, or +inf once a gap leaves the window.
  double evaluate() {
    std::sort(angles_.begin(), angles_.end());
    for (int i = 0; i + 1 < m_; ++i) gaps_[i] = angles_[i + 1] - angles_[i];
    gaps_[m_ - 1] = angles_[0] + kTwoPi - angles_[m_ - 1];
    for (double g : gaps_) {
      if (!window_.contains(g)) return kInf;
    }
    double sum = 0.0;
    for (double g : gaps_) {
      const double c = gap_cost(kind_, m_, g);
      if (std::isinf(c)) return kInf;
      sum += c;
    }
    return std::max(sum, 0.0);
  }

 private:
  KernelKind kind_;
  int m_;
  GapWindow window_;
  std::vector<double> angles_;
  std::vector<double> gaps_;
};

void require_m(int m) {
  if (m < 3) {
    throw InvalidInput("polygon order m must be >= 3, got " + std::to_string(m));
  }
}

}  // namespace

std::string_view to_string(MethodChoice method) {
  switch (method) {
    case MethodChoice::BruteForce: return "brute";
    case MethodChoice::CyclicDP: return "dp";
    case MethodChoice::Auto: return "auto";
  }
  return "auto";
}

void ExperimentConfig::validate() const {
  require_m(m);
  if (n < m) {
    throw InvalidInput("sample size n must be >= m (n=" + std::to_string(n) +
                       ", m=" + std::to_string(m) + ")");
  }
  if (replications < 1) throw InvalidInput("replications must be >= 1");
  if (threads < 0) throw InvalidInput("threads must be >= 0");
}

SearchMethod resolve_method(const ExperimentConfig& config) {
  switch (config.method) {
    case MethodChoice::BruteForce: return SearchMethod::BruteForce;
    case MethodChoice::CyclicDP: return SearchMethod::CyclicDP;
    case MethodChoice::Auto:
      return binomial(config.n, config.m) <= kAutoBruteForceLimit
                 ? SearchMethod::BruteForce
                 : SearchMethod::CyclicDP;
  }
  return SearchMethod::CyclicDP;
}

double estimated_evaluations(const ExperimentConfig& config) {
  const double reps = static_cast<double>(config.replications);
  if (resolve_method(config) == SearchMethod::BruteForce) {
    return reps * binomial(config.n, config.m);
  }
  const double n = config.n;
  return reps * n * n * n * config.m;
}

std::vector<double> replication_sample(std::uint64_t seed, std::uint64_t replication,
                                       int n) {
  StreamRng rng(seed, replication);
  std::vector<double> angles(n);
  for (double& a : angles) a = rng.angle();
  return angles;
}

std::vector<double> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const double estimate = estimated_evaluations(config);
  if (estimate > config.budget) {
    throw BudgetExceeded("estimated " + std::to_string(estimate) +
                             " kernel evaluations exceed the budget of " +
                             std::to_string(config.budget),
                         estimate);
  }
  const LimitLaw law = LimitLaw::make(config.kind, config.m);
  const SearchMethod method = resolve_method(config);
  std::vector<double> stats(static_cast<std::size_t>(config.replications));
  parallel_for(stats.size(), config.threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t rep = begin; rep < end; ++rep) {
      const std::vector<double> sample = replication_sample(config.seed, rep, config.n);
      const SearchResult res =
          method == SearchMethod::BruteForce
              ? umax_bruteforce(config.kind, sample, config.m, config.n)
              : umax_cyclic_dp(config.kind, sample, config.m);
      stats[rep] = normalize_deficit(law, config.n, res.deficit);
    }
  });
  return stats;
}

TailEstimate estimate_tail(KernelKind kind, int m, double s, long long trials,
                           std::uint64_t seed, int threads, double level) {
  require_m(m);
  const LimitLaw law = LimitLaw::make(kind, m);
  if (!(s > 0.0 && s < 0.5 * law.extremal_value)) {
    throw InvalidInput("tail width s must lie in (0, M/2)");
  }
  if (trials < 1) throw InvalidInput("trials must be >= 1");

  std::mutex mutex;
  long long hits = 0;
  parallel_for(static_cast<std::uint64_t>(trials), threads,
               [&](std::uint64_t begin, std::uint64_t end) {
                 DeficitProbe probe(kind, m, s);
                 long long local = 0;
                 for (std::uint64_t i = begin; i < end; ++i) {
                   StreamRng rng(seed, i);
                   for (double& a : probe.angles()) a = rng.angle();
                   if (probe.evaluate() <= s) ++local;
                 }
                 std::lock_guard lock(mutex);
                 hits += local;
               });

  TailEstimate est;
  est.kind = kind;
  est.m = m;
  est.s = s;
  est.trials = trials;
  est.hits = hits;
  est.level = level;
  est.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  std::tie(est.ci_low, est.ci_high) = wilson_ci(hits, trials, level);
  const double scale = std::pow(s, law.weibull_exponent);
  est.lemma_ratio = est.p_hat / scale;
  est.lemma_target = tail_coefficient(kind, m);
  const double expected = static_cast<double>(trials) * est.lemma_target * scale;
  if (expected < 10.0) {
    est.warning = "expected hit count " + std::to_string(expected) +
                  " is below 10; the estimate is unreliable";
  }
  return est;
}

OverlapEstimate estimate_overlap(KernelKind kind, int m, long long n, double t, int r,
                                 long long trials, std::uint64_t seed,
                                 long long completions, int threads) {
  require_m(m);
  if (r < 1 || r > m - 1) throw InvalidInput("overlap r must lie in 1..m-1");
  if (n < 2LL * m - r) throw InvalidInput("overlap needs n >= 2m - r");
  if (!(t > 0.0)) throw InvalidInput("t must be positive");
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  if (completions < 1) throw InvalidInput("completions must be >= 1");

  const LimitLaw law = LimitLaw::make(kind, m);
  const double s = tail_width(law, n, t);
  const int fresh = m - r;

  std::mutex mutex;
  long long first_hits = 0;
  long long joint_hits = 0;
  parallel_for(static_cast<std::uint64_t>(trials), threads,
               [&](std::uint64_t begin, std::uint64_t end) {
                 DeficitProbe first(kind, m, s);
                 DeficitProbe second(kind, m, s);
                 std::vector<double> block(m);
                 long long local_first = 0, local_joint = 0;
                 for (std::uint64_t i = begin; i < end; ++i) {
                   StreamRng rng(seed, i);
                   for (double& a : block) a = rng.angle();
                   first.angles() = block;
                   if (!(first.evaluate() < s)) continue;
                   ++local_first;
                   for (long long c = 0; c < completions; ++c) {
                     auto& pts = second.angles();
                     std::copy(block.begin() + fresh, block.end(), pts.begin());
                     for (int k = 0; k < fresh; ++k) pts[r + k] = rng.angle();
                     if (second.evaluate() < s) ++local_joint;
                   }
                 }
                 std::lock_guard lock(mutex);
                 first_hits += local_first;
                 joint_hits += local_joint;
               });

  OverlapEstimate est;
  est.kind = kind;
  est.n = n;
  est.m = m;
  est.t = t;
  est.z = inverse_transform(law, n, t);
  est.r = r;
  est.trials = trials;
  est.first_hits = first_hits;
  est.completions = completions;
  est.joint_hits = joint_hits;
  est.p_hat = static_cast<double>(first_hits) / static_cast<double>(trials);
  std::tie(est.p_ci_low, est.p_ci_high) = wilson_ci(first_hits, trials, 0.99);
  est.p_zero = first_hits == 0;
  est.tau_hat = est.p_zero ? 0.0
                           : static_cast<double>(joint_hits) /
                                 (static_cast<double>(first_hits) *
                                  static_cast<double>(completions));
  est.joint_hat = est.tau_hat * est.p_hat;
  const double log_c = log_binomial(n, m);
  auto scaled = [log_c](double p) { return p > 0.0 ? std::exp(log_c + std::log(p)) : 0.0; };
  est.lambda_hat = scaled(est.p_hat);
  est.lambda_ci_low = scaled(est.p_ci_low);
  est.lambda_ci_high = scaled(est.p_ci_high);
  return est;
}

BoundReport lao_mayer_bound(long long n, int m, double z, double p_hat,
                            const std::vector<double>& tau_hats) {
  require_m(m);
  if (n < m) throw InvalidInput("lao_mayer_bound needs n >= m");
  if (tau_hats.size() != static_cast<std::size_t>(m - 1)) {
    throw InvalidInput("lao_mayer_bound needs m-1 tau values");
  }
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw InvalidInput("p_hat must lie in [0, 1]");
  BoundReport rep;
  rep.n = n;
  rep.m = m;
  rep.z = z;
  rep.p_hat = p_hat;
  rep.lambda_hat = binomial(n, m) * p_hat;
  rep.term_count = binomial(n, m) - binomial(n - m, m);
  double sum = p_hat * rep.term_count;
  for (int r = 1; r < m; ++r) {
    const double tau = tau_hats[r - 1];
    if (!(tau >= 0.0)) throw InvalidInput("tau values must be non-negative");
    const double term = binomial(m, r) * binomial(n - m, m - r) * tau;
    rep.per_r_terms.push_back(term);
    sum += term;
  }
  rep.bound = -std::expm1(-rep.lambda_hat) * sum;
  rep.poisson_approx = std::exp(-rep.lambda_hat);
  return rep;
}

double log_binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return -kInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  using u128 = unsigned __int128;
  const u128 limit = ~u128{0};
  u128 value = 1;
  for (long long i = 0; i < k; ++i) {
    const u128 factor = static_cast<u128>(n - i);
    if (value > limit / factor) return std::exp(log_binomial(n, k));
    value = value * factor / static_cast<u128>(i + 1);
  }
  return static_cast<double>(value);
}

}  // namespace umax
