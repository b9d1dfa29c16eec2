#include "angmom/errors.hpp"
#include "angmom/sampling.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace angmom {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Histogram sample_histogram(std::size_t n, std::uint64_t seed, std::span<const double> edges,
                           const std::function<double(UniformStream &)> &draw) {
  if (n == 0)
    throw InvalidArgument("sample count must be at least 1");
  require_ascending(edges);
  Histogram h{{edges.begin(), edges.end()}, std::vector<double>(edges.size() - 1, 0.0)};

  const std::size_t shards = (n + kShardSize - 1) / kShardSize;
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, shards);
  std::vector<std::vector<std::uint64_t>> counts(workers,
                                                 std::vector<std::uint64_t>(h.bins(), 0));

  auto work = [&](std::size_t w) {
    auto &local = counts[w];
    for (std::size_t s = w; s < shards; s += workers) {
      UniformStream rng(derive_seed(seed, s));
      const std::size_t count = std::min(kShardSize, n - s * kShardSize);
      for (std::size_t i = 0; i < count; ++i) {
        if (const auto b = h.bin_of(draw(rng)); b < h.bins())
          ++local[b];
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }

  for (std::size_t b = 0; b < h.bins(); ++b) {
    std::uint64_t total = 0;
    for (const auto &c : counts)
      total += c[b];
    h.masses[b] = static_cast<double>(total) / static_cast<double>(n);
  }
  return h;
}

} // namespace angmom
