#pragma once

#include <cstdint>

namespace hcpca {

// Counter-based randomness: every (trial, time, cell) triple hashes the
// master seed to one uniform draw, so results do not depend on evaluation
// order or thread scheduling.
struct SeedSpec {
  uint64_t master = 0;
};

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline uint64_t draw_u64(SeedSpec seed, uint64_t trial, uint64_t time, uint64_t cell) {
  const uint64_t phi = 0x9e3779b97f4a7c15ULL;
  uint64_t h = mix64(seed.master + phi * (trial + 1));
  h = mix64(h + phi * (time + 1));
  return mix64(h + phi * (cell + 1));
}

inline double unit_double(uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

inline double draw_unit(SeedSpec seed, uint64_t trial, uint64_t time, uint64_t cell) {
  return unit_double(draw_u64(seed, trial, time, cell));
}

// Reserved time index for island planting draws, outside any step range.
inline constexpr uint64_t kPlantTime = ~0ULL;

}  // namespace hcpca
