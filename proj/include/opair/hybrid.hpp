#ifndef OPAIR_HYBRID_HPP
#define OPAIR_HYBRID_HPP

#include <cstdint>
#include <vector>

#include "opair/check.hpp"
#include "opair/isotopic.hpp"

namespace opair {

/// Structure constants c[i][j][k]: coefficient of basis k in the bracket of
/// basis elements i and j. Antisymmetric in (i, j).
class Tensor3 {
 public:
  Tensor3() : d_(0) {}
  explicit Tensor3(int d) : d_(d), e_(static_cast<std::size_t>(d) * d * d) {}

  int dim() const { return d_; }
  Rat& at(int i, int j, int k) { return e_[(static_cast<std::size_t>(i) * d_ + j) * d_ + k]; }
  const Rat& at(int i, int j, int k) const {
    return e_[(static_cast<std::size_t>(i) * d_ + j) * d_ + k];
  }
  bool is_zero() const;
  /// Coordinates of the bracket of two coordinate vectors.
  Vec bracket(const Vec& u, const Vec& v) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d_ == b.d_ && a.e_ == b.e_;
  }
  const std::vector<Rat>& flat() const { return e_; }

 private:
  int d_;
  std::vector<Rat> e_;
};

/// A space with two brackets given by structure constants over a fixed basis.
/// The basis is kept as ambient matrices so membership and morphism questions
/// can be answered exactly.
struct LieHybrid {
  int dim = 0;
  int ambient_n = 0;
  std::vector<Matrix> basis;
  Tensor3 c_prime, c_double_prime;
};

/// Hybrid carried by the annihilator of (A,B): primed bracket [X,Y]_A,
/// double-primed bracket [X,Y]_B, expanded over the canonical annihilator
/// basis. Throws std::logic_error if a bracket escapes the subspace.
LieHybrid hybrid_from_pair(const MatrixPair& p);

/// Hybrid on the centralizer of F: commutator and the F-twisted bracket
/// X F Y - Y F X.
LieHybrid centralizer_hybrid(const Matrix& f);

/// Antisymmetry, Jacobi for both brackets and for five random linear
/// combinations, and the six-term identity coupling the two brackets.
Report verify_hybrid(const LieHybrid& h, std::uint64_t seed);

struct Triviality {
  bool trivial = false;       // both tensors zero
  bool proportional = false;  // tensors linearly dependent as flat vectors
};

Triviality triviality_report(const LieHybrid& h);

/// Lie algebra candidate on two copies of the hybrid, bracket
///   [(X1,Y1),(X2,Y2)] = ([X1,X2]'' + (1/2)([X1,Y2]' - [X2,Y1]'),
///                        [Y1,Y2]'  + (1/2)([Y1,X2]'' - [Y2,X1]'')).
struct DoubleAlgebra {
  int dim = 0;  // 2 * hybrid dim
  Tensor3 c;
  bool antisymmetric = false;
  bool jacobi_ok = false;
  Vec first_jacobi_failure;  // flat (i,j,k) triple when jacobi_ok is false
};

DoubleAlgebra double_kv(const LieHybrid& h);

/// Right and left translation maps out of the annihilator. For invertible A
/// the maps are bracket-preserving bijections onto the centralizer hybrids of
/// A^{-1}B and BA^{-1}; for singular A a factor F with AF=B (resp. FA=B) is
/// solved for when it exists and the image is compared against the
/// centralizer of F. Surjectivity in the singular branch is reported, not
/// asserted.
Report morphism_verify(const MatrixPair& p);

}  // namespace opair

#endif
