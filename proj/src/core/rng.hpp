#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace lux {

// Every randomized routine derives its generator from (seed, stream index) so
// that trial k sees the same draws whether trials run serially or in parallel.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffull),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffull),
      static_cast<std::uint32_t>(stream >> 32),
  };
  return std::mt19937_64(seq);
}

// Fixed bits-to-double mapping instead of std::uniform_real_distribution so
// that sequences are identical across standard library implementations.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

// Uniform on the closed complex unit disc, by rejection from the square.
inline std::complex<double> uniform_disc(std::mt19937_64& gen) {
  for (;;) {
    const double re = uniform(gen, -1.0, 1.0);
    const double im = uniform(gen, -1.0, 1.0);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

inline std::size_t uniform_index(std::mt19937_64& gen, std::size_t n) {
  // n is tiny in this codebase; modulo bias is irrelevant for test-data
  // generation but we keep the draw unbiased anyway.
  const std::uint64_t limit = ~0ull - ~0ull % n;
  for (;;) {
    const std::uint64_t x = gen();
    if (x < limit) return static_cast<std::size_t>(x % n);
  }
}

}  // namespace lux
