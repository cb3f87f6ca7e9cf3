/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef QCU_DETAIL_RNG_HPP_
#define QCU_DETAIL_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace qcu::detail {

/// splitmix64: deterministic across platforms, unlike the standard library
/// distributions. Seeded results must be bit-for-bit reproducible, so all
/// core sampling goes through this.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

/// Independent stream for a (seed, index) pair.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull * (index + 1);
}

/// Poisson sample via Knuth's product method, chunked so the running product
/// never underflows for large means. Exact distribution, deterministic given
/// the stream state.
inline std::int64_t poisson_sample(SplitMix64& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  std::int64_t total = 0;
  double remaining = mean;
  constexpr double kChunk = 500.0;
  while (remaining > 0.0) {
    const double lambda = remaining > kChunk ? kChunk : remaining;
    remaining -= lambda;
    const double threshold = std::exp(-lambda);
    double product = 1.0;
    std::int64_t k = 0;
    for (;;) {
      product *= rng.uniform();
      if (product <= threshold) break;
      ++k;
    }
    total += k;
  }
  return total;
}

} // namespace qcu::detail

#endif // QCU_DETAIL_RNG_HPP_
