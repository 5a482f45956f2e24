#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace deltainfer {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// xoshiro256++ with explicit stream splitting. Every consumer derives its
/// stream from (seed, stream_id), so replicate r always sees the same draws
/// no matter how work is scheduled across threads. Distribution transforms
/// are written out explicitly (not std::*_distribution) to keep byte-level
/// reproducibility independent of the standard library.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id = 0) {
    std::uint64_t mix = seed ^ (0xA0761D6478BD642FULL * (stream_id + 1));
    s_[0] = detail::splitmix64(mix);
    s_[1] = detail::splitmix64(mix);
    s_[2] = detail::splitmix64(mix);
    s_[3] = detail::splitmix64(mix);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform index in [0, n) via multiply-shift.
  std::size_t uniform_index(std::size_t n) {
    __extension__ using uint128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<uint128>(next()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (no caching; two uniforms per draw).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Poisson by Knuth's product method, chunked so exp(-lambda) stays in
  /// normal range. O(lambda) uniforms; fine for the rates used here.
  std::uint64_t poisson(double lambda) {
    std::uint64_t count = 0;
    while (lambda > 60.0) {
      count += poisson_small(60.0);
      lambda -= 60.0;
    }
    return count + poisson_small(lambda);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t poisson_small(double lambda) {
    const double threshold = std::exp(-lambda);
    std::uint64_t k = 0;
    double product = uniform();
    while (product > threshold) {
      ++k;
      product *= uniform();
    }
    return k;
  }

  std::uint64_t s_[4];
};

}  // namespace deltainfer
