#pragma once

#include <cstdint>
#include <random>

namespace dimsat {

// mt19937_64's output sequence is fixed by the standard; the helpers below
// avoid std distributions, whose results are implementation-defined.
using Rng = std::mt19937_64;

// Uniform in [0, n). n must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace dimsat
