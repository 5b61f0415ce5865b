// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "scgvb/common.hpp"

namespace scgvb {

// Counter-based random streams built on SplitMix64 (Steele, Lea, Flood 2014;
// Vigna's fixed-increment variant).  A stream is fully determined by
// (seed, stream id), independent of thread schedule or draw interleaving
// across streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ stream_id)) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller.
  double next_normal() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::uint64_t state_;
};

/// Combines integers into a stream id, order-sensitive.
inline std::uint64_t stream_id(std::uint64_t a, std::uint64_t b,
                               std::uint64_t c = 0) {
  return RngStream::mix(RngStream::mix(RngStream::mix(a) ^ b) ^ c);
}

/// Draws from Binomial(n, p).  Exact for p in {0, 1} and for small n or
/// small n*p; a clamped normal approximation is used in the bulk regime,
/// where n*p is large enough that the discreteness error is negligible for
/// shot-noise emulation.
inline std::uint64_t binomial_sample(std::uint64_t n, double p,
                                     RngStream& rng) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial_sample(n, 1.0 - p, rng);
  if (n <= 64) {
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < n; ++i) k += (rng.next_double() < p);
    return k;
  }
  const double np = static_cast<double>(n) * p;
  if (np < 25.0) {
    // geometric waiting-time inversion, O(np) expected
    const double log1mp = std::log1p(-p);
    std::uint64_t k = 0;
    double y = 0;
    while (true) {
      const double u = (static_cast<double>(rng.next_u64() >> 11) + 0.5) *
                       0x1.0p-53;
      y += std::floor(std::log(u) / log1mp) + 1.0;
      if (y > static_cast<double>(n)) return k;
      ++k;
    }
  }
  const double sd = std::sqrt(np * (1.0 - p));
  const double draw = std::round(np + sd * rng.next_normal());
  if (draw <= 0.0) return 0;
  if (draw >= static_cast<double>(n)) return n;
  return static_cast<std::uint64_t>(draw);
}

/// Multinomial counts over the given outcome probabilities; counts sum to n
/// exactly.
inline std::vector<std::uint64_t> multinomial_sample(
    std::uint64_t n, std::span<const double> probs, RngStream& rng) {
  std::vector<std::uint64_t> counts(probs.size(), 0);
  std::uint64_t remaining = n;
  double mass = 1.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    if (remaining == 0 || mass <= 0.0) break;
    double q = probs[i] / mass;
    if (q < 0.0) q = 0.0;
    if (q > 1.0) q = 1.0;
    counts[i] = binomial_sample(remaining, q, rng);
    remaining -= counts[i];
    mass -= probs[i];
  }
  if (!probs.empty()) counts.back() = remaining;
  return counts;
}

}  // namespace scgvb
