// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace umax {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised for arguments that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The four polygon functionals studied as U-max / U-min kernels.
enum class KernelKind {
  InscribedPerimeter,
  InscribedArea,
  CircumscribedPerimeter,
  CircumscribedArea,
};

enum class Orientation { Max, Min };

inline constexpr std::array<KernelKind, 4> kAllKinds = {
    KernelKind::InscribedPerimeter, KernelKind::InscribedArea,
    KernelKind::CircumscribedPerimeter, KernelKind::CircumscribedArea};

/// Inscribed kernels are maximised, circumscribed kernels minimised.
constexpr Orientation orientation(KernelKind kind) {
  return kind == KernelKind::InscribedPerimeter ||
                 kind == KernelKind::InscribedArea
             ? Orientation::Max
             : Orientation::Min;
}

/// Short CLI name: ins-peri, ins-area, circ-peri, circ-area.
std::string_view to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view name);

/// Circular gaps between consecutive points of an m-point configuration.
///
/// Invariants: m >= 3, every gap is non-negative and the gaps sum to 2*pi
/// within 1e-12.
class GapVector {
 public:
  /// Validates and wraps an explicit gap list.
  static GapVector from_gaps(std::vector<double> gaps);

  std::span<const double> gaps() const { return gaps_; }
  int m() const { return static_cast<int>(gaps_.size()); }
  double operator[](std::size_t i) const { return gaps_[i]; }

 private:
  explicit GapVector(std::vector<double> gaps) : gaps_(std::move(gaps)) {}
  friend GapVector canonicalize(std::span<const double> angles);

  std::vector<double> gaps_;
};

/// Reduces an angle modulo 2*pi into [0, 2*pi).
double reduce_angle(double angle);

/// Sorts the angles (reduced mod 2*pi) and returns their circular gaps; the
/// last gap wraps through 2*pi. Requires at least three finite angles.
GapVector canonicalize(std::span<const double> angles);

/// Per-gap contribution g(delta) of a kernel: 2 sin(d/2), sin(d)/2,
/// 2 tan(d/2) or tan(d/2). Circumscribed kinds return +inf for d >= pi.
double gap_term(KernelKind kind, double gap);

/// Kernel value as the sum of gap_term over all gaps. +inf marks a
/// circumscribed configuration with a gap >= pi.
double kernel_eval(KernelKind kind, const GapVector& gaps);

/// Value attained by the regular m-gon: the maximum for inscribed kinds and
/// the minimum for circumscribed kinds.
double extremal_value(KernelKind kind, int m);

/// Linearised per-gap deficit against the regular gap r = 2*pi/m:
///   Max kinds:  g(r) - g(d) + g'(r) (d - r)
///   Min kinds:  g(d) - g(r) - g'(r) (d - r)
/// The linear parts cancel over a full cycle, so the costs of the m gaps sum
/// to |extremal_value - kernel_eval|. Each cost is second order in d - r and
/// is evaluated without subtracting nearly equal totals. Costs are
/// non-negative except for inscribed-area gaps above pi.
double gap_cost(KernelKind kind, int m, double gap);

/// Distance from the extremal value, M - kernel for Max kinds and
/// kernel - M for Min kinds, clamped to >= 0. +inf where kernel_eval is +inf.
double deficit(KernelKind kind, const GapVector& gaps);

/// Lower bound on the deficit of any configuration containing a gap >= pi.
/// For InscribedArea such a polygon lies in a half disk, so its area is at
/// most (m-1)/2 sin(pi/(m-1)). Circumscribed kinds give +inf; for
/// InscribedPerimeter 0 is returned since its gap costs are never negative.
double half_disk_deficit_floor(KernelKind kind, int m);

/// Closed interval of gaps whose cost does not exceed a bound.
struct GapWindow {
  double lo = 0.0;
  double hi = kTwoPi;
  bool contains(double gap) const { return gap >= lo && gap <= hi; }
};

/// Interval of gaps d with gap_cost(kind, m, d) <= bound (padded by a
/// relative 1e-9). Any configuration with deficit <= bound has all of its
/// gaps inside this window, provided every gap cost is non-negative; for
/// InscribedArea that holds when bound < half_disk_deficit_floor, otherwise
/// the full range [0, 2*pi] is returned.
GapWindow gap_window(KernelKind kind, int m, double bound);

}  // namespace umax
