#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace negmono {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to turn (seed, stream) pairs into
/// well-separated generator seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the stream-th independent substream of `seed`. Sample i of a
/// dataset and worker w of a search both draw from derive_seed(seed, i|w),
/// so results do not depend on the number of threads.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
inline std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace negmono
