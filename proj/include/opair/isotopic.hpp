#ifndef OPAIR_ISOTOPIC_HPP
#define OPAIR_ISOTOPIC_HPP

#include <cstdint>
#include <utility>

#include "opair/check.hpp"
#include "opair/linalg.hpp"
#include "opair/matrix.hpp"

namespace opair {

/// The object under analysis: an ordered pair (A, B) of n-by-n matrices.
struct MatrixPair {
  int n = 0;
  Matrix A, B;

  MatrixPair() = default;
  MatrixPair(Matrix a, Matrix b);
};

/// Bracket on the first slot of the operator pair: [X,Y]_A = XAY - YAX.
Matrix bracket_v1(const Matrix& x, const Matrix& y, const Matrix& a);
/// Bracket on the second slot: [A,B]_X = AXB - BXA.
Matrix bracket_v2(const Matrix& a, const Matrix& b, const Matrix& x);

/// True iff A and B span a line or less (rank of the stacked coordinate
/// matrix is at most 1).
bool proportional(const Matrix& a, const Matrix& b);

/// Annihilator of span(A,B): all X with A X B = B X A. Bilinearity and
/// antisymmetry of [.,.]_X reduce the quantifier over the whole span to the
/// single generator pair; see docs/REDUCTION.md.
Subspace annihilator(const MatrixPair& p);

/// Normalizer: all X with A X B - B X A inside span(A,B).
Subspace normalizer(const MatrixPair& p);

enum class PairClass { ZeroQuotient, AffLine, Okubo };

const char* pair_class_name(PairClass c);

struct PairInvariants {
  int a = 0;        // dim of the annihilator
  int a0 = 0;       // dim normalizer - dim annihilator
  PairClass cls = PairClass::ZeroQuotient;
  bool a0_in_range = true;  // a0 in {0,1,2}; anything else is a property violation
};

PairInvariants classify(const MatrixPair& p);

/// Closed-form generators of the annihilator for n = 2. They always lie in
/// the annihilator; they span it iff they are linearly independent.
std::pair<Matrix, Matrix> closed_form_generators_2x2(const MatrixPair& p);

/// (A,B) |-> (CAD, CBD) for invertible C, D. Throws on singular input.
MatrixPair gl_transform(const MatrixPair& p, const Matrix& c, const Matrix& d);

/// Samples random tuples and verifies, exactly: the Jacobi identity of
/// [.,.]_{alpha A + beta B}, and the two mixed six-term half identities
/// coupling the two brackets.
Report verify_pair_axioms(int n, int samples, std::uint64_t seed);

/// Closure of the two distinguished subspaces under [.,.]_{A'} for A' in
/// span(A,B), plus dimension bookkeeping of the quotient.
Report substructure_check(const MatrixPair& p);

}  // namespace opair

#endif
