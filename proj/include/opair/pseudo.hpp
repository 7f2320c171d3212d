#ifndef OPAIR_PSEUDO_HPP
#define OPAIR_PSEUDO_HPP

#include <cstdint>

#include "opair/check.hpp"
#include "opair/isotopic.hpp"

namespace opair {

/// A point of the doubled second slot, W2 = V2 + V2.
struct W2Point {
  int n = 0;
  Matrix A, B;

  W2Point() = default;
  W2Point(Matrix a, Matrix b);
  MatrixPair pair() const { return MatrixPair(A, B); }
};

/// A velocity at a W2 point.
struct Tangent {
  Matrix dA, dB;

  bool is_zero() const { return dA.is_zero() && dB.is_zero(); }
  friend Tangent operator+(const Tangent& a, const Tangent& b) {
    return {a.dA + b.dA, a.dB + b.dB};
  }
  friend Tangent operator-(const Tangent& a, const Tangent& b) {
    return {a.dA - b.dA, a.dB - b.dB};
  }
  friend Tangent operator*(const Rat& c, const Tangent& t) { return {c * t.dA, c * t.dB}; }
  friend bool operator==(const Tangent& a, const Tangent& b) {
    return a.dA == b.dA && a.dB == b.dB;
  }
};

/// Coordinates of a tangent in Q^{2 n^2}: vec(dA) followed by vec(dB).
Vec tangent_vec(const Tangent& t);

/// The two generating fields and their pencil:
///   tau'(X)(A,B)  = ([A,B]_X, 0)
///   tau''(X)(A,B) = (0, [A,B]_X)
Tangent tau_prime(const Matrix& x, const W2Point& pt);
Tangent tau_double_prime(const Matrix& x, const W2Point& pt);
Tangent tau_pencil(const Matrix& x, const W2Point& pt, const Rat& lambda, const Rat& mu);

struct TauTriple {
  Tangent t_prime, t_double_prime, t_pencil;
};

TauTriple tau_fields(const Matrix& x, const W2Point& pt, const Rat& lambda, const Rat& mu);

/// Field commutator convention used throughout: [u,v](p) = Dv(p)[u(p)] -
/// Du(p)[v(p)], with the directional derivatives taken exactly from the
/// polynomial form of the fields.
///
/// Structure-map signs making the compatibility identities hold exactly under
/// that convention. Detected once on a fixture (detect_signs) and frozen:
/// the primed structure map is +[X,Y]_B, the double-primed one is -[X,Y]_A.
constexpr int kEpsPrime = 1;
constexpr int kEpsDoublePrime = -1;

/// Re-derives the two signs on a fixture; returns false if they disagree
/// with the frozen constants above.
bool detect_signs(int n);

/// Exact commutator of two pencil fields at a point, under the convention
/// above. The fields are quadratic in the point, so the directional
/// derivatives are closed-form.
Tangent tau_pencil_commutator(const W2Point& pt, const Matrix& x, const Rat& lx, const Rat& mx,
                              const Matrix& y, const Rat& ly, const Rat& my);

/// Commutators of tau fields close onto the pointwise brackets, for the
/// primed and double-primed structures and for five random pencil members.
Report verify_pseudoalgebra(int n, int samples, std::uint64_t seed);

/// The coupling identity between the two structures:
/// [tau'(X),tau''(Y)] + [tau''(X),tau'(Y)] = tau'(m''(X,Y)) + tau''(m'(X,Y)).
Report verify_pseudohybrid_compat(int n, int samples, std::uint64_t seed);

/// Tangent space at pt of the two-sided group action (A,B) -> (CAD, CBD):
/// span of {(uA + Av, uB + Bv)} inside Q^{2 n^2}.
Subspace gl2_tangent(const W2Point& pt);

/// delta(X)(A,B) = (AXA + AXB, AXB + BXB), defined for X in the annihilator
/// of the base point. Throws std::invalid_argument otherwise.
Tangent equihybrid_variation(const Matrix& x, const W2Point& pt);

struct OrbitDecomposition {
  Subspace t_prime, t_double_prime, equihybrid, gl2;
  bool direct = false;  // the three parts sum directly
  bool equal = false;   // their sum equals the group tangent space
  OrbitDecomposition(int ambient)
      : t_prime(ambient), t_double_prime(ambient), equihybrid(ambient), gl2(ambient) {}
};

OrbitDecomposition decomposition_check(const W2Point& pt);

/// First-order invariance of the annihilator equations along an equihybrid
/// direction: for every basis element X' of the annihilator,
/// dA X' B + A X' dB - dB X' A - B X' dA = 0 with (dA,dB) = delta(X).
Report leaf_preservation_check(const W2Point& pt, const Matrix& x);

/// (i) mu*A - lambda*B has zero velocity under the pencil field;
/// (ii) the tau' orbit tangent equals, under trace identification, the span
/// of coadjoint-action vectors {B X A - A X B} of the Lie algebra carried by
/// B at the point A.
Report conservation_and_coadjoint_check(const W2Point& pt, const Rat& lambda, const Rat& mu,
                                        const Matrix& x);

/// Covariant derivative of an annihilator section along the direction
/// tau'(Z1) + tau''(Z2) + delta(Z0):
///   nabla X = dX + [Z1,X]_B - [Z2,X]_A,  [U,X]_C = UCX - XCU.
/// The relative sign between the two compensator terms is forced: it is the
/// unique choice for which parallel transport preserves the annihilator
/// equations to first order (see transport_residual and the tests).
struct CovariantResult {
  Tangent direction;
  Matrix nabla;
};

CovariantResult covariant_derivative(const W2Point& pt, const Matrix& z1, const Matrix& z2,
                                     const Matrix& z0, const Matrix& x, const Matrix& dx);

/// d/dt(A X B - B X A) at t = 0 along the covariant direction, with the
/// section moved by dX = -([Z1,X]_B - [Z2,X]_A). Zero for every admissible
/// configuration.
Matrix transport_residual(const W2Point& pt, const Matrix& z1, const Matrix& z2,
                          const Matrix& z0, const Matrix& x);

/// Same derivative when the Z2 compensator enters with the opposite sign.
/// Equals -2 [A,B]_{[Z2,X]_A} identically; kept to pin the sign choice.
Matrix transport_residual_opposite_sign(const W2Point& pt, const Matrix& z1, const Matrix& z2,
                                        const Matrix& z0, const Matrix& x);

/// Commutator of two equihybrid variations, each extended off the leaf as a
/// quadratic field with frozen first argument. Recorded, not asserted: the
/// off-leaf extension is a choice.
struct VariationCommutator {
  Tangent residual;
  bool commute = false;
};

VariationCommutator variation_commutator(const W2Point& pt, const Matrix& x, const Matrix& y);

struct GriffinReport {
  int dim_w1 = 0;        // 2 n^2
  int dim_ac = 0;        // annihilator dimension at the point
  int dim_griffin = 0;   // dim_w1 + dim_ac
  int spanned_orbit_dim = 0;
};

GriffinReport griffin_report(const W2Point& pt);

}  // namespace opair

#endif
