// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/constants.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace umax {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kLogDomainThreshold = 30;

void require_m(int m) {
  if (m < 3) {
    throw InvalidInput("polygon order m must be >= 3, got " +
                       std::to_string(m));
  }
}

void require_n(const LimitLaw& law, long long n) {
  if (n < law.m) {
    throw InvalidInput("sample size n must be >= m (n=" + std::to_string(n) +
                       ", m=" + std::to_string(law.m) + ")");
  }
}

// The kind-specific factor c inside (pi c)^{(m-1)/2}.
double shape_factor(KernelKind kind, int m) {
  const double t = std::tan(kPi / m);
  switch (kind) {
    case KernelKind::InscribedPerimeter: return std::sin(kPi / m);
    case KernelKind::InscribedArea: return std::sin(2.0 * kPi / m);
    case KernelKind::CircumscribedPerimeter: return 2.0 * (1.0 + t * t) * t;
    case KernelKind::CircumscribedArea: return (1.0 + t * t) * t;
  }
  return 0.0;
}

double sign_of(Orientation o) { return o == Orientation::Max ? 1.0 : -1.0; }

}  // namespace

LimitLaw LimitLaw::make(KernelKind kind, int m) {
  require_m(m);
  LimitLaw law;
  law.kind = kind;
  law.m = m;
  law.extremal_value = umax::extremal_value(kind, m);
  law.weibull_exponent = 0.5 * (m - 1);
  law.constant = limit_constant(kind, m);
  law.scaling_exponent = 2.0 * m / (m - 1);
  law.orientation = umax::orientation(kind);
  return law;
}

double log_limit_constant(KernelKind kind, int m) {
  require_m(m);
  const double beta = 0.5 * (m - 1);
  return 1.5 * std::log(static_cast<double>(m)) +
         beta * std::log(kPi * shape_factor(kind, m)) +
         std::lgamma(0.5 * (m + 1));
}

double limit_constant(KernelKind kind, int m) {
  require_m(m);
  if (m > kLogDomainThreshold) return std::exp(log_limit_constant(kind, m));
  const double beta = 0.5 * (m - 1);
  return std::pow(static_cast<double>(m), 1.5) *
         std::pow(kPi * shape_factor(kind, m), beta) *
         std::tgamma(0.5 * (m + 1));
}

double asymptotic_constant(KernelKind kind, int m) {
  require_m(m);
  double log_k = (m - 0.5) * std::log(kPi) +
                 2.0 * std::log(static_cast<double>(m)) - 0.5 * m;
  if (kind == KernelKind::InscribedPerimeter ||
      kind == KernelKind::CircumscribedArea) {
    log_k -= 0.5 * (m - 1) * std::log(2.0);
  }
  return std::exp(log_k);
}

double tail_coefficient(KernelKind kind, int m) {
  require_m(m);
  return std::exp(std::lgamma(m + 1.0) - log_limit_constant(kind, m));
}

std::vector<double> form_eigenvalues(int m) {
  require_m(m);
  std::vector<double> out(m - 1);
  for (int k = 1; k < m; ++k) {
    // 1 - cos(x) = 2 sin^2(x/2) keeps the small eigenvalues accurate.
    const double s = std::sin(0.5 * kPi * k / m);
    out[k - 1] = 2.0 * s * s;
  }
  return out;
}

double sine_product(int m) {
  if (m < 2) {
    throw InvalidInput("sine_product needs m >= 2, got " + std::to_string(m));
  }
  const double closed = std::sqrt(static_cast<double>(m)) / std::ldexp(1.0, m - 1);
#ifndef NDEBUG
  if (m <= 50) {
    double direct = 1.0;
    for (int k = 1; k < m; ++k) direct *= std::sin(kPi * k / (2.0 * m));
    assert(std::abs(direct - closed) <= 1e-12 * closed);
  }
#endif
  return closed;
}

double ball_volume(int d) {
  if (d < 0) {
    throw InvalidInput("ball dimension must be >= 0, got " + std::to_string(d));
  }
  return std::exp(0.5 * d * std::log(kPi) - std::lgamma(0.5 * d + 1.0));
}

double limit_cdf(const LimitLaw& law, double t) {
  if (!(t > 0.0)) return 0.0;
  return -std::expm1(-std::pow(t, law.weibull_exponent) / law.constant);
}

double normalize_stat(const LimitLaw& law, long long n, double raw) {
  require_n(law, n);
  return std::pow(static_cast<double>(n), law.scaling_exponent) *
         sign_of(law.orientation) * (law.extremal_value - raw);
}

double normalize_deficit(const LimitLaw& law, long long n, double deficit) {
  require_n(law, n);
  return std::pow(static_cast<double>(n), law.scaling_exponent) * deficit;
}

double inverse_transform(const LimitLaw& law, long long n, double t) {
  return law.extremal_value - sign_of(law.orientation) * tail_width(law, n, t);
}

double tail_width(const LimitLaw& law, long long n, double t) {
  require_n(law, n);
  return t * std::pow(static_cast<double>(n), -law.scaling_exponent);
}

}  // namespace umax
