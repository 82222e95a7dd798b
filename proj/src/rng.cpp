// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#include "umax/rng.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "umax/geometry.hpp"

namespace umax {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t first_draw)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream),
      draw_(first_draw) {}

std::uint64_t StreamRng::next_u64() {
  const std::uint64_t block = draw_ >> 1;
  if (block != cached_block_) {
    const auto out = philox4x32(
        {static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
         static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
        key_);
    cache_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    cache_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    cached_block_ = block;
  }
  return cache_[draw_++ & 1];
}

double StreamRng::angle() {
  const double a = kTwoPi * uniform();
  return a < kTwoPi ? a : 0.0;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::uint64_t count, int threads,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (count == 0) return;
  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)), count);
  if (workers == 1) {
    body(0, count);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = count * w / workers;
      const std::uint64_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace umax
