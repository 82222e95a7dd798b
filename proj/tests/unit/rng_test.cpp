// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "umax/geometry.hpp"
#include "umax/rng.hpp"

using namespace umax;

TEST_SUITE("rng") {

TEST_CASE("philox4x32-10 known answers") {
  using C = std::array<std::uint32_t, 4>;
  using K = std::array<std::uint32_t, 2>;
  CHECK(philox4x32(C{0, 0, 0, 0}, K{0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(philox4x32(C{~0u, ~0u, ~0u, ~0u}, K{~0u, ~0u}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(philox4x32(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                   K{0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are reproducible and positionable") {
  StreamRng a(42, 7);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 9; ++i) first.push_back(a.next_u64());
  CHECK(a.position() == 9);
  StreamRng b(42, 7, 5);
  for (int i = 5; i < 9; ++i) CHECK(b.next_u64() == first[i]);
  StreamRng c(42, 8);
  CHECK(c.next_u64() != first[0]);
  StreamRng d(43, 7);
  CHECK(d.next_u64() != first[0]);
}

TEST_CASE("uniform moments and angle range") {
  StreamRng rng(1, 0);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sq / n == doctest::Approx(1.0 / 3).epsilon(0.01));
  for (int i = 0; i < 10000; ++i) {
    const double a = rng.angle();
    CHECK(a >= 0.0);
    CHECK(a < kTwoPi);
  }
}

TEST_CASE("parallel_for covers every index once") {
  for (int threads : {1, 2, 3, 8}) {
    std::vector<std::atomic<int>> seen(1001);
    parallel_for(seen.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t i = b; i < e; ++i) seen[i]++;
    });
    for (auto& s : seen) CHECK(s.load() == 1);
  }
  CHECK_THROWS_AS(parallel_for(10, 4,
                               [](std::uint64_t b, std::uint64_t) {
                                 if (b > 0) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}

}  // TEST_SUITE
