#include <doctest.h>

#include "opair/diffop.hpp"

using namespace opair;

TEST_CASE("double factorial conventions") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(2) == 2);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("coefficient function values") {
  CHECK(f_coefficient(0, 0) == Rat(1));
  CHECK(f_coefficient(0, 2) == Rat(1, 2));
  CHECK(f_coefficient(0, 4) == Rat(3, 8));
  CHECK(f_coefficient(0, 6) == Rat(5, 16));
  CHECK(f_coefficient(1, 0) == Rat(1));
  CHECK(f_coefficient(1, 2) == Rat(1, 3));
  CHECK(f_coefficient(3, 1) == Rat(0));  // odd arguments vanish
}

TEST_CASE("basis operators move even monomials and kill odd ones") {
  const int deg = 12;
  const TruncatedOperator e0 = basis_element(0, deg);
  for (int k = 0; 2 * k <= deg; ++k)
    CHECK(e0.m.at(2 * k, 2 * k) == f_coefficient(0, 2 * k));
  const TruncatedOperator e1 = basis_element(1, deg);
  CHECK(e1.m.at(1, 0) == Rat(1));
  CHECK(e1.m.at(3, 2) == Rat(1, 3));
  for (int n = 0; n <= 5; ++n) {
    const TruncatedOperator e = basis_element(n, deg);
    for (int j = 1; j <= deg; j += 2)
      for (int i = 0; i <= deg; ++i) CHECK(e.m.at(i, j) == Rat(0));
  }
  CHECK_THROWS_AS(basis_element(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(basis_element(5, 4), std::invalid_argument);
}

TEST_CASE("membership: zero is a member, the identity is not") {
  const int deg = 10;
  CHECK(membership_check({deg, Matrix::zero(deg + 1, deg + 1)}).member);
  const MembershipReport id_rep = membership_check({deg, Matrix::identity(deg + 1)});
  CHECK_FALSE(id_rep.member);
  // d P x - x P d = 1 for P = id: the residual is the identity on the window.
  for (int j = 0; j <= id_rep.window; ++j) CHECK(id_rep.residual.at(j, j) == Rat(1));
}

TEST_CASE("all basis operators pass membership at degree 24") {
  for (int n = 0; n <= 8; ++n) {
    const MembershipReport rep = membership_check(basis_element(n, 24));
    CHECK(rep.member);
    CHECK(rep.degree_shift == n);
  }
}

TEST_CASE("PDE residual values") {
  SymbolPolynomial zero;
  CHECK(pde_residual(zero).is_zero());
  SymbolPolynomial one;
  one.add(0, 0, 1);
  const SymbolPolynomial r = pde_residual(one);
  CHECK(r.coeff.size() == 1);
  CHECK(r.coeff.at({0, 0}) == Rat(1));
  // x^2 xi: (2+1+1) x^2 xi + 2 x xi^0
  SymbolPolynomial p;
  p.add(2, 1, 1);
  const SymbolPolynomial q = pde_residual(p);
  CHECK(q.coeff.at({2, 1}) == Rat(4));
  CHECK(q.coeff.at({1, 0}) == Rat(2));
}

TEST_CASE("PDE has no polynomial kernel through total degree ten") {
  CHECK(pde_kernel_dim(10) == 0);
}

TEST_CASE("commutation table: frozen low cells") {
  const CommutationTable t = commutation_table(2, 12);
  CHECK(t.x_bracket[0][0].zero);
  CHECK(t.d_bracket[0][0].zero);
  CHECK(t.x_bracket[1][1].zero);
  // [e1, e0]_x = -e2 and [e1, e0]_d = -e0
  const TableCell& x10 = t.x_bracket[1][0];
  CHECK_FALSE(x10.zero);
  CHECK(x10.pure);
  CHECK(x10.index == 2);
  CHECK(x10.coeff == Rat(-1));
  const TableCell& d10 = t.d_bracket[1][0];
  CHECK_FALSE(d10.zero);
  CHECK(d10.pure);
  CHECK(d10.index == 0);
  CHECK(d10.coeff == Rat(-1));
  // antisymmetric partner
  CHECK(t.x_bracket[0][1].coeff == Rat(1));
  CHECK(t.d_bracket[0][1].coeff == Rat(1));
}

TEST_CASE("commutation table structure through index six") {
  const CommutationTable t = commutation_table(6, 20);
  CHECK(t.verdict.zero_iff_even_sum);
  CHECK(t.verdict.unit_coefficients);
  CHECK(t.verdict.antisymmetric);
  CHECK(t.verdict.shifts_ok);
  CHECK(t.verdict.observed_sign_first_odd_x == -1);
  CHECK(t.verdict.observed_sign_first_odd_d == -1);
  CHECK_FALSE(t.verdict.matches_tabulated_assignment);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      if ((m + n) % 2 == 0) {
        CHECK(t.x_bracket[m][n].zero);
        CHECK(t.d_bracket[m][n].zero);
      } else {
        CHECK(t.x_bracket[m][n].index == m + n + 1);
        CHECK(t.d_bracket[m][n].index == m + n - 1);
      }
    }
}

TEST_CASE("table rejects insufficient truncation") {
  CHECK_THROWS_AS(commutation_table(6, 13), std::invalid_argument);
}
