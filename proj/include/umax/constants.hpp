// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "umax/geometry.hpp"

namespace umax {

/// Weibull limit law of the normalised extremal statistic
///   t = n^gamma |M - H_n|,   P{t <= x} -> 1 - exp(-x^beta / K),
/// with beta = (m-1)/2 and gamma = 2m/(m-1).
struct LimitLaw {
  KernelKind kind = KernelKind::InscribedPerimeter;
  int m = 3;
  double extremal_value = 0.0;    // M
  double weibull_exponent = 0.0;  // beta
  double constant = 0.0;          // K
  double scaling_exponent = 0.0;  // gamma
  Orientation orientation = Orientation::Max;

  static LimitLaw make(KernelKind kind, int m);
};

/// Closed-form Weibull constant K_im:
///   m^{3/2} (pi c)^{(m-1)/2} Gamma((m+1)/2)
/// with c = sin(pi/m), sin(2pi/m), 2(1+tan^2(pi/m)) tan(pi/m) and
/// (1+tan^2(pi/m)) tan(pi/m) for the four kinds. Orders above 30 are
/// evaluated in the log domain.
double limit_constant(KernelKind kind, int m);

/// Natural logarithm of limit_constant; finite for every m >= 3.
double log_limit_constant(KernelKind kind, int m);

/// Stirling asymptote of the constant for large m:
///   pi^{m-1/2} m^2 / (2^{(m-1)/2} e^{m/2})  for ins-peri and circ-area,
///   pi^{m-1/2} m^2 / e^{m/2}                for ins-area and circ-peri.
double asymptotic_constant(KernelKind kind, int m);

/// Gamma(m+1) / K_im, the limit of s^{-(m-1)/2} P{deficit <= s} for m
/// uniform points.
double tail_coefficient(KernelKind kind, int m);

/// Spectrum 1 - cos(pi k / m), k = 1..m-1, of the tridiagonal form matrix
/// with unit diagonal and -1/2 off the diagonal. Ascending.
std::vector<double> form_eigenvalues(int m);

/// prod_{k=1}^{m-1} sin(pi k / (2m)) = sqrt(m) / 2^{m-1}.
double sine_product(int m);

/// Volume of the unit ball in R^d.
double ball_volume(int d);

/// 0 for t <= 0, otherwise 1 - exp(-t^beta / K).
double limit_cdf(const LimitLaw& law, double t);

/// t = n^gamma (M - raw) for Max kinds, n^gamma (raw - M) for Min kinds.
double normalize_stat(const LimitLaw& law, long long n, double raw);

/// Same scaling applied to an already computed deficit |M - raw|.
double normalize_deficit(const LimitLaw& law, long long n, double deficit);

/// Threshold z_n(t) = M -/+ t n^{-gamma}; inverse of normalize_stat.
double inverse_transform(const LimitLaw& law, long long n, double t);

/// Deficit width s = t n^{-gamma} corresponding to z_n(t).
double tail_width(const LimitLaw& law, long long n, double t);

}  // namespace umax
