#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace pzbench::detail {

// Independent stream `index` under a master seed. std::seed_seq and
// mt19937_64 are fully specified by the standard, so streams are portable.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::size_t index) {
  const auto i = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  return std::mt19937_64(seq);
}

// Uniform on [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pzbench::detail
