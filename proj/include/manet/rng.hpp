#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace manet {

/// Seeded random source used by every stochastic part of the simulator.
///
/// Draws are built directly from the raw 64-bit engine output so that a given
/// seed produces the same sequence regardless of the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi]; returns lo when the interval is degenerate.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  /// Independent child stream, keyed by a stream label.
  Rng fork(std::uint64_t stream) const;

 private:
  std::uint64_t seed_material() const;

  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace manet
