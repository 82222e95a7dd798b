// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace umax {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// h - sin(h), accurate for small |h|.
double h_minus_sin(double h) {
  if (std::abs(h) > 0.25) return h - std::sin(h);
  const double h2 = h * h;
  double term = h * h2 / 6.0;
  double sum = term;
  for (int k = 2; k < 12; ++k) {
    term *= -h2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

// sin(h) - h cos(h), accurate for small |h|.
double sin_minus_h_cos(double h) {
  if (std::abs(h) > 0.25) return std::sin(h) - h * std::cos(h);
  // sum_{k>=1} (-1)^(k+1) 2k h^(2k+1) / (2k+1)!
  const double h2 = h * h;
  double power = h * h2;  // h^(2k+1) / (2k+1)! for k = 1
  power /= 6.0;
  double sum = 2.0 * power;
  for (int k = 2; k < 12; ++k) {
    power *= -h2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += 2.0 * k * power;
  }
  return sum;
}

void require_m(int m) {
  if (m < 3) {
    throw InvalidInput("polygon order m must be >= 3, got " +
                       std::to_string(m));
  }
}

double peri_cost(int m, double gap) {
  const double a = kPi / m;
  const double h = 0.5 * (gap - kTwoPi / m);
  const double s = std::sin(0.5 * h);
  return 4.0 * std::sin(a) * s * s + 2.0 * std::cos(a) * h_minus_sin(h);
}

double area_cost(int m, double gap) {
  const double a = kTwoPi / m;
  const double h = gap - a;
  const double s = std::sin(0.5 * h);
  return std::sin(a) * s * s + 0.5 * std::cos(a) * h_minus_sin(h);
}

// tan(a + h) - tan(a) - h sec^2(a), doubled, with a = pi/m.
double circ_peri_cost(int m, double gap) {
  if (!(gap < kPi)) return kInf;
  const double a = kPi / m;
  const double h = 0.5 * (gap - kTwoPi / m);
  const double ca = std::cos(a);
  const double num = ca * sin_minus_h_cos(h) + h * std::sin(a) * std::sin(h);
  return 2.0 * num / (ca * ca * std::cos(a + h));
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::InscribedPerimeter: return "ins-peri";
    case KernelKind::InscribedArea: return "ins-area";
    case KernelKind::CircumscribedPerimeter: return "circ-peri";
    case KernelKind::CircumscribedArea: return "circ-area";
  }
  return "unknown";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) {
  for (KernelKind kind : kAllKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

GapVector GapVector::from_gaps(std::vector<double> gaps) {
  if (gaps.size() < 3) {
    throw InvalidInput("a gap vector needs at least 3 gaps");
  }
  double sum = 0.0;
  for (double g : gaps) {
    if (!std::isfinite(g) || g < 0.0) {
      throw InvalidInput("gaps must be finite and non-negative");
    }
    sum += g;
  }
  if (std::abs(sum - kTwoPi) > 1e-12) {
    throw InvalidInput("gaps must sum to 2*pi");
  }
  return GapVector(std::move(gaps));
}

double reduce_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

GapVector canonicalize(std::span<const double> angles) {
  if (angles.size() < 3) {
    throw InvalidInput("an angle sample needs at least 3 points, got " +
                       std::to_string(angles.size()));
  }
  std::vector<double> sorted(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i])) throw InvalidInput("angles must be finite");
    sorted[i] = reduce_angle(angles[i]);
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> gaps(sorted.size());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    gaps[i] = sorted[i + 1] - sorted[i];
  }
  gaps.back() = sorted.front() + kTwoPi - sorted.back();
  return GapVector(std::move(gaps));
}

double gap_term(KernelKind kind, double gap) {
  switch (kind) {
    case KernelKind::InscribedPerimeter: return 2.0 * std::sin(0.5 * gap);
    case KernelKind::InscribedArea: return 0.5 * std::sin(gap);
    case KernelKind::CircumscribedPerimeter:
      return gap < kPi ? 2.0 * std::tan(0.5 * gap) : kInf;
    case KernelKind::CircumscribedArea:
      return gap < kPi ? std::tan(0.5 * gap) : kInf;
  }
  return kInf;
}

double kernel_eval(KernelKind kind, const GapVector& gaps) {
  // The circumscribed perimeter is computed as twice the area sum so that
  // area == perimeter / 2 holds bit for bit.
  const KernelKind base = kind == KernelKind::CircumscribedPerimeter
                              ? KernelKind::CircumscribedArea
                              : kind;
  double sum = 0.0;
  for (double g : gaps.gaps()) {
    const double term = gap_term(base, g);
    if (std::isinf(term)) return kInf;
    sum += term;
  }
  return kind == KernelKind::CircumscribedPerimeter ? 2.0 * sum : sum;
}

double extremal_value(KernelKind kind, int m) {
  require_m(m);
  switch (kind) {
    case KernelKind::InscribedPerimeter: return 2.0 * m * std::sin(kPi / m);
    case KernelKind::InscribedArea: return 0.5 * m * std::sin(kTwoPi / m);
    case KernelKind::CircumscribedPerimeter: return 2.0 * m * std::tan(kPi / m);
    case KernelKind::CircumscribedArea: return m * std::tan(kPi / m);
  }
  return 0.0;
}

double gap_cost(KernelKind kind, int m, double gap) {
  switch (kind) {
    case KernelKind::InscribedPerimeter: return peri_cost(m, gap);
    case KernelKind::InscribedArea: return area_cost(m, gap);
    case KernelKind::CircumscribedPerimeter: return circ_peri_cost(m, gap);
    case KernelKind::CircumscribedArea: return 0.5 * circ_peri_cost(m, gap);
  }
  return kInf;
}

double deficit(KernelKind kind, const GapVector& gaps) {
  const int m = gaps.m();
  double sum = 0.0;
  for (double g : gaps.gaps()) {
    const double c = gap_cost(kind, m, g);
    if (std::isinf(c)) return kInf;
    sum += c;
  }
  return std::max(sum, 0.0);
}

double half_disk_deficit_floor(KernelKind kind, int m) {
  require_m(m);
  switch (kind) {
    case KernelKind::InscribedPerimeter: return 0.0;
    case KernelKind::InscribedArea:
      return extremal_value(kind, m) - 0.5 * (m - 1) * std::sin(kPi / (m - 1));
    case KernelKind::CircumscribedPerimeter:
    case KernelKind::CircumscribedArea: return kInf;
  }
  return 0.0;
}

GapWindow gap_window(KernelKind kind, int m, double bound) {
  require_m(m);
  if (!(bound < kInf)) return {};
  double upper = kTwoPi;
  switch (kind) {
    case KernelKind::InscribedPerimeter: break;
    case KernelKind::InscribedArea:
      if (!(bound < half_disk_deficit_floor(kind, m))) return {};
      upper = kPi;
      break;
    case KernelKind::CircumscribedPerimeter:
    case KernelKind::CircumscribedArea: upper = kPi; break;
  }
  const double target = std::max(bound, 0.0) * (1.0 + 1e-9);
  const double r = kTwoPi / m;
  auto over = [&](double d) { return !(gap_cost(kind, m, d) <= target); };

  // The cost is unimodal with its zero at r; bisect each flank keeping the
  // endpoint on the far side of the bound.
  GapWindow w;
  if (!over(0.0)) {
    w.lo = 0.0;
  } else {
    double in = r, out = 0.0;
    while (true) {
      const double mid = 0.5 * (in + out);
      if (mid == in || mid == out) break;
      (over(mid) ? out : in) = mid;
    }
    w.lo = out;
  }
  if (!over(upper)) {
    w.hi = upper;
  } else {
    double in = r, out = upper;
    while (true) {
      const double mid = 0.5 * (in + out);
      if (mid == in || mid == out) break;
      (over(mid) ? out : in) = mid;
    }
    w.hi = out;
  }
  return w;
}

}  // namespace umax
