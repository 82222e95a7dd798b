// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace umax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sizes(std::size_t n, int m) {
  if (m < 3) {
    throw InvalidInput("polygon order m must be >= 3, got " + std::to_string(m));
  }
  if (static_cast<std::size_t>(m) > n) {
    throw InvalidInput("polygon order m=" + std::to_string(m) +
                       " exceeds sample size n=" + std::to_string(n));
  }
}

SearchResult finish(KernelKind kind, const std::vector<double>& theta,
                    std::vector<int> subset, SearchMethod method) {
  SearchResult out;
  out.method = method;
  if (subset.empty()) {
    out.value = kInf;
    out.deficit = kInf;
    return out;
  }
  std::vector<double> chosen(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) chosen[k] = theta[subset[k]];
  const GapVector gaps = canonicalize(chosen);
  out.value = kernel_eval(kind, gaps);
  out.deficit = deficit(kind, gaps);
  out.subset = std::move(subset);
  return out;
}

// Depth-first enumeration with running partial sums of the per-gap terms.
class Enumerator {
 public:
  Enumerator(KernelKind kind, const std::vector<double>& theta, int m)
      : n_(static_cast<int>(theta.size())),
        m_(m),
        maximize_(orientation(kind) == Orientation::Max),
        forward_(static_cast<std::size_t>(n_) * n_),
        closing_(static_cast<std::size_t>(n_) * n_),
        path_(m) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        forward_[idx(i, j)] = gap_term(kind, theta[j] - theta[i]);
        closing_[idx(i, j)] = gap_term(kind, theta[i] + kTwoPi - theta[j]);
      }
    }
    best_ = maximize_ ? -kInf : kInf;
  }

  std::vector<int> run() {
    for (int a = 0; a + m_ <= n_; ++a) {
      path_[0] = a;
      descend(1, a, 0.0);
    }
    return best_subset_;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  void descend(int depth, int last, double partial) {
    if (depth == m_) {
      const double total = partial + closing_[idx(path_[0], last)];
      if (!std::isfinite(total)) return;
      if (maximize_ ? total > best_ : total < best_) {
        best_ = total;
        best_subset_.assign(path_.begin(), path_.end());
      }
      return;
    }
    const int remaining = m_ - depth;
    for (int j = last + 1; j + remaining <= n_; ++j) {
      const double next = partial + forward_[idx(last, j)];
      if (std::isinf(next)) continue;
      path_[depth] = j;
      descend(depth + 1, j, next);
    }
  }

  int n_;
  int m_;
  bool maximize_;
  std::vector<double> forward_;
  std::vector<double> closing_;
  std::vector<int> path_;
  double best_;
  std::vector<int> best_subset_;
};

double subset_deficit(KernelKind kind, const std::vector<double>& theta,
                      const std::vector<int>& subset) {
  std::vector<double> chosen(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) chosen[k] = theta[subset[k]];
  return deficit(kind, canonicalize(chosen));
}

// Index of the sample point circularly closest to `target`.
int nearest_point(const std::vector<double>& theta, double target) {
  const int n = static_cast<int>(theta.size());
  const auto it = std::lower_bound(theta.begin(), theta.end(), target);
  const int hi = static_cast<int>(it - theta.begin()) % n;
  const int lo = (hi + n - 1) % n;
  auto dist = [&](int i) {
    const double d = std::abs(theta[i] - target);
    return std::min(d, kTwoPi - d);
  };
  return dist(lo) <= dist(hi) ? lo : hi;
}

struct Incumbent {
  double deficit = kInf;
  std::vector<int> subset;
};

// Best subset among those built by snapping the regular m-gon through each
// anchor onto the nearest sample points.
Incumbent greedy_incumbent(KernelKind kind, const std::vector<double>& theta, int m) {
  Incumbent best;
  const int n = static_cast<int>(theta.size());
  std::vector<int> subset(m);
  for (int a = 0; a < n; ++a) {
    subset[0] = a;
    for (int k = 1; k < m; ++k) {
      subset[k] = nearest_point(theta, reduce_angle(theta[a] + kTwoPi * k / m));
    }
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const double d = subset_deficit(kind, theta, sorted);
    if (d < best.deficit) {
      best.deficit = d;
      best.subset = std::move(sorted);
    }
  }
  return best;
}

struct Node {
  int index;
  int parent;  // position in the previous layer, -1 for the anchor
  double cost;
};

class CyclicDp {
 public:
  CyclicDp(KernelKind kind, const std::vector<double>& theta, int m)
      : kind_(kind), theta_(theta), n_(static_cast<int>(theta.size())), m_(m),
        slot_(n_, -1) {}

  std::vector<int> run() {
    Incumbent inc = greedy_incumbent(kind_, theta_, m_);
    best_ = inc.deficit;
    best_subset_ = std::move(inc.subset);
    update_window();
    for (int a = 0; a + m_ <= n_; ++a) search_anchor(a);
    return best_subset_;
  }

 private:
  void update_window() {
    // Windowing and partial-sum pruning rely on every gap cost of an
    // improving subset being non-negative.
    pruned_ = std::isfinite(best_) &&
              best_ < half_disk_deficit_floor(kind_, m_);
    if (kind_ == KernelKind::InscribedPerimeter) pruned_ = std::isfinite(best_);
    window_ = pruned_ ? gap_window(kind_, m_, best_) : GapWindow{};
    limit_ = pruned_ ? best_ * (1.0 + 1e-9) + 1e-300 : kInf;
  }

  void search_anchor(int a) {
    layers_.assign(m_, {});
    layers_[0].push_back({a, -1, 0.0});
    for (int k = 1; k < m_; ++k) {
      const int last_allowed = n_ - (m_ - k);
      std::vector<int> touched;
      for (int p = 0; p < static_cast<int>(layers_[k - 1].size()); ++p) {
        const Node from = layers_[k - 1][p];
        const double base = theta_[from.index];
        auto first = std::lower_bound(theta_.begin() + from.index + 1,
                                      theta_.end(), base + window_.lo);
        for (int j = static_cast<int>(first - theta_.begin());
             j <= last_allowed; ++j) {
          const double gap = theta_[j] - base;
          if (gap > window_.hi) break;
          const double cost = from.cost + gap_cost(kind_, m_, gap);
          if (!(cost <= limit_)) continue;
          if (slot_[j] < 0) {
            slot_[j] = static_cast<int>(layers_[k].size());
            layers_[k].push_back({j, p, cost});
            touched.push_back(j);
          } else if (cost < layers_[k][slot_[j]].cost) {
            layers_[k][slot_[j]] = {j, p, cost};
          }
        }
      }
      for (int j : touched) slot_[j] = -1;
      if (layers_[k].empty()) return;
    }
    const auto& tail = layers_[m_ - 1];
    int winner = -1;
    double winner_cost = best_;
    for (int p = 0; p < static_cast<int>(tail.size()); ++p) {
      const double gap = theta_[a] + kTwoPi - theta_[tail[p].index];
      if (!window_.contains(gap)) continue;
      const double total = tail[p].cost + gap_cost(kind_, m_, gap);
      if (total < winner_cost) {
        winner_cost = total;
        winner = p;
      }
    }
    if (winner < 0) return;
    std::vector<int> subset(m_);
    for (int k = m_ - 1, p = winner; k >= 0; --k) {
      subset[k] = layers_[k][p].index;
      p = layers_[k][p].parent;
    }
    best_ = std::max(winner_cost, 0.0);
    best_subset_ = std::move(subset);
    update_window();
  }

  KernelKind kind_;
  const std::vector<double>& theta_;
  int n_;
  int m_;
  std::vector<int> slot_;
  std::vector<std::vector<Node>> layers_;
  double best_ = kInf;
  std::vector<int> best_subset_;
  bool pruned_ = false;
  GapWindow window_;
  double limit_ = kInf;
};

}  // namespace

std::string_view to_string(SearchMethod method) {
  return method == SearchMethod::BruteForce ? "brute" : "dp";
}

std::vector<double> sorted_sample(std::span<const double> angles) {
  std::vector<double> theta(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i])) throw InvalidInput("angles must be finite");
    theta[i] = reduce_angle(angles[i]);
  }
  std::sort(theta.begin(), theta.end());
  return theta;
}

SearchResult umax_bruteforce(KernelKind kind, std::span<const double> angles,
                             int m, int cap) {
  check_sizes(angles.size(), m);
  if (angles.size() > static_cast<std::size_t>(cap)) {
    throw InvalidInput("brute-force search refused for n=" +
                       std::to_string(angles.size()) + " > cap " +
                       std::to_string(cap) +
                       "; use the cyclic DP method or raise the cap");
  }
  const std::vector<double> theta = sorted_sample(angles);
  Enumerator e(kind, theta, m);
  return finish(kind, theta, e.run(), SearchMethod::BruteForce);
}

SearchResult umax_cyclic_dp(KernelKind kind, std::span<const double> angles, int m) {
  check_sizes(angles.size(), m);
  const std::vector<double> theta = sorted_sample(angles);
  CyclicDp dp(kind, theta, m);
  return finish(kind, theta, dp.run(), SearchMethod::CyclicDP);
}

}  // namespace umax
