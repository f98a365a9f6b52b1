#ifndef MAXLAB_RNG_HPP
#define MAXLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "maxlab/core.hpp"

namespace maxlab {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so the conversions from the
/// raw 64-bit stream are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Child stream for (seed, index); keeps trial results independent of
  /// how many draws earlier trials consumed.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal() {
    // Box-Muller; 1 - uniform() lies in (0, 1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  bool coin(double prob_true = 0.5) { return uniform() < prob_true; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace maxlab

#endif  // MAXLAB_RNG_HPP
