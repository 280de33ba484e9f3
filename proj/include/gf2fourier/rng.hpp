#pragma once

#include <cstdint>

namespace gf2f {

// splitmix64 output function. Used as a tiny counter-based PRF: a draw is
// prf64(seed, counter), so results depend only on (seed, counter) and never
// on evaluation order or platform library details. All reproducible sampling
// in this project goes through this; std:: distributions are deliberately
// avoided because their outputs are implementation-defined.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t prf64(std::uint64_t seed, std::uint64_t counter) noexcept {
  return mix64(seed + 0x9E3779B97F4A7C15ULL * (counter + 1));
}

}  // namespace gf2f
