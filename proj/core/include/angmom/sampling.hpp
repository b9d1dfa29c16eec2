#pragma once

#include "angmom/density.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>

namespace angmom {

//! Platform-independent uniform [0, 1) stream: mt19937_64 bits mapped with a
//! fixed 53-bit conversion (std::uniform_real_distribution is not portable
//! bit-for-bit across standard libraries).
class UniformStream {
public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

//! Seed of shard `index` derived from a master seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

//! Samples per shard. The shard layout depends only on n, never on the
//! number of worker threads, so results are reproducible for a given seed.
inline constexpr std::size_t kShardSize = std::size_t{1} << 16;

//! Draws n values with `draw`, histograms them into `edges` (values outside
//! are dropped) and returns per-bin fractions of n. Shards run on worker
//! threads; integer counts are merged, so the result is order-independent.
Histogram sample_histogram(std::size_t n, std::uint64_t seed, std::span<const double> edges,
                           const std::function<double(UniformStream &)> &draw);

} // namespace angmom
