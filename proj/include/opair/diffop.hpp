#ifndef OPAIR_DIFFOP_HPP
#define OPAIR_DIFFOP_HPP

#include <map>
#include <vector>

#include "opair/check.hpp"
#include "opair/matrix.hpp"

namespace opair {

/// An operator on polynomials truncated at degree D: a (D+1)x(D+1) matrix in
/// the monomial basis {1, x, ..., x^D}; column j holds the coefficients of
/// the image of x^j, with anything above degree D dropped.
struct TruncatedOperator {
  int deg = 0;  // truncation degree D
  Matrix m;     // (D+1) x (D+1)

  TruncatedOperator() = default;
  TruncatedOperator(int d, Matrix mat) : deg(d), m(std::move(mat)) {}
};

TruncatedOperator op_x(int deg);    // multiplication by x
TruncatedOperator op_ddx(int deg);  // d/dx

/// m!! with the conventions (-1)!! = 0!! = 1; m >= -1.
mpz_class double_factorial(long m);

/// f_n(2k) = (2k-1)!! / (2k+n)!!, f_n(odd) = 0.
Rat f_coefficient(int n, int arg);

/// e_n: x^{2k} -> f_n(2k) x^{2k+n}, odd monomials -> 0. Requires n >= 0 and
/// deg >= n.
TruncatedOperator basis_element(int n, int deg);

struct MembershipReport {
  bool member = false;
  int window = -1;       // largest input degree on which the residual is faithful
  int degree_shift = 0;  // observed maximal degree shift of the operator
  Matrix residual;       // d P x - x P d, faithful columns only meaningful
};

/// Tests d P x = x P d on the degrees where truncation cannot contaminate
/// either composition path. The faithful window is computed from the
/// operator's observed degree shift, capped at D-2.
MembershipReport membership_check(const TruncatedOperator& p);

/// Polynomial in x and xi with rational coefficients, sparse by exponent.
struct SymbolPolynomial {
  std::map<std::pair<int, int>, Rat> coeff;  // (deg x, deg xi) -> coefficient

  void add(int a, int b, const Rat& c);
  bool is_zero() const;
};

/// Residual of P''_{x xi} + x P'_x + xi P'_xi + P, exactly.
SymbolPolynomial pde_residual(const SymbolPolynomial& p);

/// Dimension of the kernel of the same operator on polynomials of total
/// degree <= max_degree (exact linear algebra on the coefficient space).
int pde_kernel_dim(int max_degree);

struct TableCell {
  bool zero = true;       // bracket vanishes on the faithful window
  int index = -1;         // k with bracket = coeff * e_k, when pure
  Rat coeff;              // the coefficient, when pure
  bool pure = true;       // bracket is an exact multiple of a single e_k
};

struct TableVerdict {
  bool zero_iff_even_sum = true;   // bracket vanishes exactly when m+n is even
  bool unit_coefficients = true;   // nonzero cells have coefficient +-1
  bool antisymmetric = true;
  bool shifts_ok = true;           // x-bracket raises the index by 1, d-bracket lowers by 1
  int observed_sign_first_odd_x = 0;      // sign when m odd, n even
  int observed_sign_first_odd_d = 0;
  // The conventional tabulated assignment for this basis takes +1 when the
  // first index is odd and attaches the raised index to the primed bracket.
  bool matches_tabulated_assignment = false;
};

struct CommutationTable {
  int max_index = 0;  // M
  int deg = 0;        // truncation degree D
  std::vector<std::vector<TableCell>> x_bracket;  // [e_m, e_n]_x
  std::vector<std::vector<TableCell>> d_bracket;  // [e_m, e_n]_d
  TableVerdict verdict;
};

/// Both brackets for all m, n <= M, expanded exactly in the e basis.
/// Requires deg >= 2M + 2.
CommutationTable commutation_table(int max_index, int deg);

}  // namespace opair

#endif
