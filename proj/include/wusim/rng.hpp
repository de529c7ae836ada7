#pragma once

// Deterministic named substreams. Every random quantity in an experiment is
// drawn from a stream identified by (root seed, purpose tag, index), so any
// part of a run can be resampled or held fixed independently of the rest.
// Identical tuples always produce identical draw sequences.
//
// Gaussian variates are generated by an in-house Box-Muller transform on top
// of std::mt19937_64, whose output sequence is pinned by the C++ standard;
// std::normal_distribution is implementation-defined and is not used.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace wusim {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

inline std::uint64_t mix_stream_id(std::uint64_t seed, std::string_view purpose,
                                   std::uint64_t index) {
  std::uint64_t h = detail::splitmix64(seed);
  h = detail::splitmix64(h ^ detail::fnv1a64(purpose));
  h = detail::splitmix64(h ^ index);
  return h;
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view purpose, std::uint64_t index)
      : engine_(mix_stream_id(seed, purpose, index)) {}

  explicit RngStream(std::uint64_t raw_state_seed) : engine_(raw_state_seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection sampling keeps the distribution exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1]
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Circularly-symmetric complex Gaussian with E|z|^2 = var.
  std::complex<double> next_cgauss(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {s * re, s * im};
  }

  // A fresh 64-bit value for seeding a dependent stream.
  std::uint64_t derive_seed() { return detail::splitmix64(engine_()); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline RngStream derive_stream(std::uint64_t seed, std::string_view purpose,
                               std::uint64_t index) {
  return RngStream(seed, purpose, index);
}

}  // namespace wusim
