#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bbwt/common.hpp"

namespace bbwt {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum class BenchPattern { Random, Unary, Alternating, Decreasing };

struct BenchConfig {
  std::vector<std::size_t> sizes;  // nonempty, positive
  std::uint64_t seed = 0;
  unsigned alphabet = 256;  // one of 2, 4, 16, 256
  BenchPattern pattern = BenchPattern::Random;
  std::size_t repetitions = 1;  // >= 1
};

/// Deterministic benchmark input; identical arguments yield identical bytes.
inline Bytes bench_input(BenchPattern pattern, unsigned alphabet,
                         std::size_t size, std::uint64_t seed) {
  Bytes out(size);
  switch (pattern) {
    case BenchPattern::Random: {
      std::uint64_t state = seed ^ (0x5851F42D4C957F2DULL * (alphabet + 1));
      state ^= 0x14057B7EF767814FULL * static_cast<std::uint64_t>(size);
      const std::uint64_t mask = alphabet - 1;  // alphabet is a power of two
      for (std::size_t i = 0; i < size; ++i)
        out[i] = static_cast<Byte>(splitmix64(state) & mask);
      break;
    }
    case BenchPattern::Unary:
      for (std::size_t i = 0; i < size; ++i) out[i] = 'a';
      break;
    case BenchPattern::Alternating:
      for (std::size_t i = 0; i < size; ++i) out[i] = i % 2 ? 'b' : 'a';
      break;
    case BenchPattern::Decreasing:
      // Sawtooth of strictly decreasing blocks; maximizes unit factors.
      for (std::size_t i = 0; i < size; ++i)
        out[i] = static_cast<Byte>((alphabet - 1) - (i % alphabet));
      break;
  }
  return out;
}

}  // namespace bbwt
