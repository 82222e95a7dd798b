// Copyright 2026 The umax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace umax {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based stream of uniforms keyed by (seed, stream).
///
/// Draw d of stream s is a pure function of (seed, s, d), so any replication
/// or trial can be regenerated in isolation and the values do not depend on
/// how work is split across threads.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_draw = 0);

  /// Next 64 random bits.
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform angle on [0, 2*pi).
  double angle();

  std::uint64_t position() const { return draw_; }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t draw_;
  std::array<std::uint64_t, 2> cache_{};
  std::uint64_t cached_block_ = ~std::uint64_t{0};
};

/// Resolves a thread-count request; 0 means "all hardware threads".
int resolve_threads(int requested);

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on up
/// to `threads` workers. Chunk boundaries depend only on count and threads.
void parallel_for(std::uint64_t count, int threads,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body);

}  // namespace umax
