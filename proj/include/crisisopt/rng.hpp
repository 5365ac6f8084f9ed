#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace crisis {

/// SplitMix64 finalizer; used to derive well-separated per-path seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent normal stream for one path. The draws depend only on
/// (seed, path_id), so any partition of paths across workers yields the same
/// numbers.
class PathStream {
public:
  PathStream(std::uint64_t seed, std::uint64_t path_id)
      : engine_(mix64(mix64(seed) ^ mix64(path_id + 0x632be59bd9b4e019ULL))) {}

  double normal() { return normal_(engine_); }

  /// Fills `out` with N(0, variance) draws.
  void brownian_increments(std::span<double> out, double variance);

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace crisis
