#ifndef OPAIR_RNG_HPP
#define OPAIR_RNG_HPP

#include <cstdint>

#include "opair/matrix.hpp"

namespace opair {

/// SplitMix64. Constants are fixed so that seeded sweeps reproduce
/// bit-identically on any platform (see README for the exact recipe).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [-range, range]: next() mod (2*range+1), shifted.
  long int_in(long range) {
    return static_cast<long>(next() % (2 * static_cast<std::uint64_t>(range) + 1)) - range;
  }

 private:
  std::uint64_t state_;
};

/// Independent substream for work item `index` of a seeded run.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return SplitMix64(mix.next());
}

/// n-by-n matrix with integer entries uniform in [-range, range].
Matrix random_matrix(SplitMix64& g, int n, long range = 9);
/// Rejection-samples until invertible.
Matrix random_invertible(SplitMix64& g, int n, long range = 9);
/// Nonzero scalar in [-range, range].
Rat random_nonzero_scalar(SplitMix64& g, long range = 9);

}  // namespace opair

#endif
