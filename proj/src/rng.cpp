#include "opair/rng.hpp"

#include "opair/linalg.hpp"

namespace opair {

Matrix random_matrix(SplitMix64& g, int n, long range) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(g.int_in(range));
  return m;
}

Matrix random_invertible(SplitMix64& g, int n, long range) {
  for (;;) {
    Matrix m = random_matrix(g, n, range);
    if (rank(m) == n) return m;
  }
}

Rat random_nonzero_scalar(SplitMix64& g, long range) {
  for (;;) {
    const long v = g.int_in(range);
    if (v != 0) return Rat(v);
  }
}

}  // namespace opair
