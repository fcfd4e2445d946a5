#include "manet/rng.hpp"

#include <limits>
#include <stdexcept>

namespace manet {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index: empty range");
  const std::uint64_t bound = n;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return static_cast<std::size_t>(v % bound);
}

std::uint64_t Rng::seed_material() const {
  // Copy so forking does not advance this stream.
  std::mt19937_64 copy = engine_;
  return copy();
}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(mix_seed(seed_material() ^ mix_seed(stream)));
}

}  // namespace manet
