#pragma once

#include <cstdint>
#include <random>

namespace endorsim {

// Every stochastic routine takes this engine by reference; runs are
// reproducible for a fixed seed on a given build.
using Rng = std::mt19937_64;

// Independent stream for sub-task `stream` of a run seeded with `seed`.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

}  // namespace endorsim
