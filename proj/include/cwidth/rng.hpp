#pragma once

#include <cstdint>
#include <random>

namespace cwidth {

/// SplitMix64 (Steele, Lea, Flood 2014). Used to expand a user seed into
/// engine seeds; distinct streams come from distinct stream indices, so the
/// same top-level seed can feed several independent generators.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// mt19937_64 seeded from SplitMix64(seed) advanced by the stream index.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  SplitMix64 mix{seed};
  std::uint64_t s = mix.next();
  for (std::uint64_t i = 0; i < stream; ++i) s = mix.next();
  return std::mt19937_64(s);
}

}  // namespace cwidth
