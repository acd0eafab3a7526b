// wvox - weather-augmented LiDAR point clouds and sparse voxel grid sharing
// SPDX-License-Identifier: Apache-2.0

#ifndef WVOX_RNG_HPP
#define WVOX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "wvox/error.hpp"

namespace wvox {

namespace detail {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic, platform-independent random stream.
///
/// Streams are addressed by a seed plus a key path built with derive():
/// identical (seed, key path) pairs yield identical sample sequences on
/// every platform. The generator is a splitmix64 counter; all
/// distributions are sampled by explicit inversion or rejection rather
/// than std::<random> distributions, whose algorithms the standard
/// leaves unspecified.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed)
      : state_(detail::splitmix64_mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  /// Child stream keyed by an integer (e.g. a beam or frame index).
  [[nodiscard]] RngStream derive(std::uint64_t key) const {
    return RngStream(FromState{}, detail::splitmix64_mix(state_ ^ detail::splitmix64_mix(key + 0x9e3779b97f4a7c15ULL)));
  }

  /// Child stream keyed by a string (e.g. a scenario or vehicle id).
  [[nodiscard]] RngStream derive(std::string_view key) const {
    return derive(detail::fnv1a64(key));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::splitmix64_mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller (two uniforms per sample).
  double normal() {
    double u1 = 1.0 - next_double();  // (0, 1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate) {
    if (rate <= 0.0) throw InvalidArgument("exponential: rate must be > 0");
    return -std::log(1.0 - next_double()) / rate;
  }

  /// Exponential with rate `rate` conditioned on [lo, hi], by inversion.
  /// Degenerate interval (lo == hi) returns lo.
  double truncated_exponential(double rate, double lo, double hi) {
    if (rate <= 0.0) throw InvalidArgument("truncated_exponential: rate must be > 0");
    if (lo > hi) throw InvalidArgument("truncated_exponential: lo > hi");
    double flo = std::exp(-rate * lo);
    double fhi = std::exp(-rate * hi);
    double u = next_double();
    double f = flo - u * (flo - fhi);
    if (f <= 0.0) return hi;
    double x = -std::log(f) / rate;
    return std::min(std::max(x, lo), hi);
  }

  /// Poisson-distributed count. Knuth's product method below lambda 10,
  /// Hormann's PTRS transformed rejection above it.
  std::uint64_t poisson(double lambda) {
    if (lambda < 0.0) throw InvalidArgument("poisson: lambda must be >= 0");
    if (lambda == 0.0) return 0;
    if (lambda < 10.0) {
      double limit = std::exp(-lambda);
      double prod = next_double();
      std::uint64_t n = 0;
      while (prod > limit) {
        ++n;
        prod *= next_double();
      }
      return n;
    }
    return poisson_ptrs(lambda);
  }

private:
  struct FromState {};
  RngStream(FromState, std::uint64_t state) : state_(state) {}

  std::uint64_t poisson_ptrs(double lambda) {
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      double u = next_double() - 0.5;
      double v = next_double();
      double us = 0.5 - std::abs(u);
      double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
      if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
          k * loglam - lambda - std::lgamma(k + 1.0)) {
        return static_cast<std::uint64_t>(k);
      }
    }
  }

  std::uint64_t state_;
};

}  // namespace wvox

#endif
