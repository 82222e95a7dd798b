// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "umax/constants.hpp"

using namespace umax;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("closed forms at m = 3") {
  CHECK(rel(limit_constant(KernelKind::InscribedPerimeter, 3), 9 * kPi / 2) <= 1e-14);
  CHECK(rel(limit_constant(KernelKind::InscribedArea, 3), 9 * kPi / 2) <= 1e-14);
  CHECK(rel(limit_constant(KernelKind::CircumscribedPerimeter, 3), 72 * kPi) <= 1e-14);
  CHECK(rel(limit_constant(KernelKind::CircumscribedArea, 3), 36 * kPi) <= 1e-14);
  CHECK(rel(tail_coefficient(KernelKind::InscribedPerimeter, 3), 4 / (3 * kPi)) <= 1e-14);
  for (KernelKind kind : kAllKinds) CHECK_THROWS_AS(limit_constant(kind, 2), InvalidInput);
}

TEST_CASE("law fields") {
  for (KernelKind kind : kAllKinds) {
    for (int m = 3; m <= 40; ++m) {
      const LimitLaw law = LimitLaw::make(kind, m);
      CHECK(law.constant > 0.0);
      CHECK(law.weibull_exponent == 0.5 * (m - 1));
      CHECK(law.scaling_exponent == 2.0 * m / (m - 1));
      CHECK(law.extremal_value == extremal_value(kind, m));
      CHECK(law.orientation == orientation(kind));
    }
  }
}

TEST_CASE("constant identities") {
  for (int m = 3; m <= 100; ++m) {
    const double beta = 0.5 * (m - 1);
    const double k1 = limit_constant(KernelKind::InscribedPerimeter, m);
    CHECK(rel(limit_constant(KernelKind::InscribedArea, m),
              std::pow(2 * std::cos(kPi / m), beta) * k1) <= 1e-12);
    CHECK(rel(limit_constant(KernelKind::CircumscribedPerimeter, m),
              std::pow(2.0, beta) * limit_constant(KernelKind::CircumscribedArea, m)) <= 1e-12);
  }
}

TEST_CASE("direct and log-domain evaluation agree across the switch") {
  for (KernelKind kind : kAllKinds) {
    for (int m = 25; m <= 36; ++m) {
      CHECK(rel(std::log(limit_constant(kind, m)), log_limit_constant(kind, m)) <= 1e-13);
    }
  }
}

TEST_CASE("form eigenvalues") {
  const auto e3 = form_eigenvalues(3);
  REQUIRE(e3.size() == 2);
  CHECK(e3[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e3[1] == doctest::Approx(1.5).epsilon(1e-15));
  const auto e4 = form_eigenvalues(4);
  CHECK(e4[0] == doctest::Approx(1 - std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(e4[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e4[2] == doctest::Approx(1 + std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(form_eigenvalues(2), InvalidInput);

  for (int m = 3; m <= 20; ++m) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m - 1, m - 1);
    for (int i = 0; i < m - 1; ++i) {
      b(i, i) = 1.0;
      if (i + 1 < m - 1) b(i, i + 1) = b(i + 1, i) = -0.5;
    }
    const Eigen::VectorXd dense =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b).eigenvalues();
    const auto closed = form_eigenvalues(m);
    for (int k = 0; k < m - 1; ++k) {
      CHECK(std::abs(dense(k) - closed[k]) <= 1e-10);
      CHECK(closed[k] > 0.0);
      CHECK(closed[k] < 2.0);
    }
  }
}

TEST_CASE("sine product") {
  CHECK(sine_product(2) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK(sine_product(3) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-15));
  CHECK(sine_product(4) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(sine_product(1), InvalidInput);
  for (int m = 2; m <= 50; ++m) {
    double direct = 1.0;
    for (int k = 1; k < m; ++k) direct *= std::sin(kPi * k / (2.0 * m));
    CHECK(rel(sine_product(m), direct) <= 1e-12);
  }
}

TEST_CASE("ball volume") {
  CHECK(ball_volume(0) == doctest::Approx(1.0));
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(ball_volume(3) == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
  CHECK_THROWS_AS(ball_volume(-1), InvalidInput);
}

TEST_CASE("volume chain reproduces the tail coefficient") {
  for (int m = 3; m <= 10; ++m) {
    const auto lambda = form_eigenvalues(m);
    double lhs = ball_volume(m - 1);
    for (double l : lambda) lhs *= std::sqrt(2.0 / (std::sin(kPi / m) * l));
    const double rhs = std::pow(kTwoPi, m - 1) / std::tgamma(m) *
                       tail_coefficient(KernelKind::InscribedPerimeter, m);
    CHECK(rel(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("asymptotic constants") {
  CHECK(asymptotic_constant(KernelKind::InscribedPerimeter, 3) ==
        doctest::Approx(std::pow(kPi, 2.5) * 9 / (2 * std::exp(1.5))).epsilon(1e-14));
  CHECK(asymptotic_constant(KernelKind::InscribedPerimeter, 3) ==
        doctest::Approx(17.565).epsilon(1e-4));
  for (int m = 3; m <= 60; ++m) {
    const double ratio = asymptotic_constant(KernelKind::InscribedArea, m) /
                         asymptotic_constant(KernelKind::InscribedPerimeter, m);
    CHECK(rel(ratio, std::pow(2.0, 0.5 * (m - 1))) <= 1e-12);
    CHECK(asymptotic_constant(KernelKind::CircumscribedArea, m) ==
          asymptotic_constant(KernelKind::InscribedPerimeter, m));
    CHECK(asymptotic_constant(KernelKind::CircumscribedPerimeter, m) ==
          asymptotic_constant(KernelKind::InscribedArea, m));
  }
  const double r100 = limit_constant(KernelKind::InscribedPerimeter, 100) /
                      asymptotic_constant(KernelKind::InscribedPerimeter, 100);
  CHECK(r100 > 0.9);
  CHECK(r100 < 1.1);
}

TEST_CASE("limit cdf") {
  const LimitLaw law = LimitLaw::make(KernelKind::InscribedPerimeter, 3);
  CHECK(limit_cdf(law, 0.0) == 0.0);
  CHECK(limit_cdf(law, -1.0) == 0.0);
  CHECK(limit_cdf(law, 9 * kPi / 2) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-15));
  for (double t : {1.0, 5.0, 20.0}) {
    CHECK(std::abs(limit_cdf(law, t) - (1 - std::exp(-2 * t / (9 * kPi)))) <= 1e-14);
  }
  for (KernelKind kind : kAllKinds) {
    for (int m : {3, 5, 8}) {
      const LimitLaw l = LimitLaw::make(kind, m);
      double prev = 0.0;
      for (double t = 0.0; t < 1e4; t = 1.5 * t + 0.01) {
        const double f = limit_cdf(l, t);
        CHECK(f >= prev);
        prev = f;
      }
      CHECK(limit_cdf(l, 1e12) == doctest::Approx(1.0));
      const double scale = std::pow(l.constant, 1.0 / l.weibull_exponent);
      for (double x : {0.1, 0.7, 1.3, 2.0}) {
        CHECK(limit_cdf(l, scale * x) ==
              doctest::Approx(1 - std::exp(-std::pow(x, l.weibull_exponent))).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("normalisation") {
  const LimitLaw law3 = LimitLaw::make(KernelKind::InscribedPerimeter, 3);
  CHECK(normalize_stat(law3, 50, law3.extremal_value) == 0.0);
  CHECK(normalize_stat(law3, 10, 3 * std::sqrt(3.0) - 1e-3) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(normalize_stat(law3, 2, 1.0), InvalidInput);

  const LimitLaw law5 = LimitLaw::make(KernelKind::InscribedPerimeter, 5);
  const double z = inverse_transform(law5, 40, 2.5);
  CHECK(rel(normalize_stat(law5, 40, z), 2.5) <= 1e-12);

  const LimitLaw circ = LimitLaw::make(KernelKind::CircumscribedPerimeter, 4);
  CHECK(inverse_transform(circ, 30, 1.0) > circ.extremal_value);
  CHECK(rel(normalize_stat(circ, 30, inverse_transform(circ, 30, 1.0)), 1.0) <= 1e-9);
  CHECK(normalize_deficit(law5, 40, tail_width(law5, 40, 2.5)) ==
        doctest::Approx(2.5).epsilon(1e-15));
}

}  // TEST_SUITE
