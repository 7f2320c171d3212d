#include "opair/diffop.hpp"

#include <stdexcept>

#include "opair/linalg.hpp"

namespace opair {

TruncatedOperator op_x(int deg) {
  Matrix m(deg + 1, deg + 1);
  for (int j = 0; j + 1 <= deg; ++j) m.at(j + 1, j) = 1;
  return {deg, m};
}

TruncatedOperator op_ddx(int deg) {
  Matrix m(deg + 1, deg + 1);
  for (int j = 1; j <= deg; ++j) m.at(j - 1, j) = j;
  return {deg, m};
}

mpz_class double_factorial(long m) {
  if (m < -1) throw std::invalid_argument("double factorial needs m >= -1");
  mpz_class r = 1;
  for (long v = m; v > 1; v -= 2) r *= v;
  return r;
}

Rat f_coefficient(int n, int arg) {
  if (n < 0) throw std::invalid_argument("basis index must be nonnegative");
  if (arg % 2 != 0) return Rat(0);
  Rat r(double_factorial(arg - 1), double_factorial(arg + n));
  r.canonicalize();
  return r;
}

TruncatedOperator basis_element(int n, int deg) {
  if (n < 0) throw std::invalid_argument("basis index must be nonnegative");
  if (deg < n) throw std::invalid_argument("truncation degree below basis index");
  Matrix m(deg + 1, deg + 1);
  for (int j = 0; j <= deg; j += 2)
    if (j + n <= deg) m.at(j + n, j) = f_coefficient(n, j);
  return {deg, m};
}

MembershipReport membership_check(const TruncatedOperator& p) {
  const int deg = p.deg;
  MembershipReport rep;
  int shift = 0;
  for (int j = 0; j <= deg; ++j)
    for (int i = 0; i <= deg; ++i)
      if (!rat_is_zero(p.m.at(i, j)) && i - j > shift) shift = i - j;
  rep.degree_shift = shift;
  rep.window = std::min(deg - 2, deg - 1 - shift);
  const Matrix d = op_ddx(deg).m, x = op_x(deg).m;
  rep.residual = d * p.m * x - x * p.m * d;
  rep.member = rep.window >= 0;
  for (int j = 0; j <= rep.window && rep.member; ++j)
    for (int i = 0; i <= deg; ++i)
      if (!rat_is_zero(rep.residual.at(i, j))) {
        rep.member = false;
        break;
      }
  return rep;
}

void SymbolPolynomial::add(int a, int b, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto key = std::make_pair(a, b);
  auto it = coeff.find(key);
  if (it == coeff.end()) {
    coeff.emplace(key, c);
    return;
  }
  it->second += c;
  if (rat_is_zero(it->second)) coeff.erase(it);
}

bool SymbolPolynomial::is_zero() const { return coeff.empty(); }

SymbolPolynomial pde_residual(const SymbolPolynomial& p) {
  // On a monomial x^a xi^b the operator acts as
  //   (a + b + 1) x^a xi^b + a b x^{a-1} xi^{b-1}.
  SymbolPolynomial out;
  for (const auto& [key, c] : p.coeff) {
    const auto [a, b] = key;
    out.add(a, b, Rat(a + b + 1) * c);
    if (a > 0 && b > 0) out.add(a - 1, b - 1, Rat(static_cast<long>(a) * b) * c);
  }
  return out;
}

int pde_kernel_dim(int max_degree) {
  std::vector<std::pair<int, int>> monomials;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b) monomials.emplace_back(a, b);
  const int dim = static_cast<int>(monomials.size());
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < dim; ++k) index[monomials[k]] = k;
  Matrix l(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const auto [a, b] = monomials[k];
    l.at(index.at({a, b}), k) += Rat(a + b + 1);
    if (a > 0 && b > 0) l.at(index.at({a - 1, b - 1}), k) += Rat(static_cast<long>(a) * b);
  }
  return null_space(l).dim();
}

namespace {

/// Expands a bracket matrix against c * e_k on the faithful columns.
TableCell classify_cell(const Matrix& t, int deg, int window, int candidate) {
  TableCell cell;
  cell.zero = true;
  for (int j = 0; j <= window && cell.zero; ++j)
    for (int i = 0; i <= deg; ++i)
      if (!rat_is_zero(t.at(i, j))) {
        cell.zero = false;
        break;
      }
  if (cell.zero) return cell;
  cell.index = candidate;
  const TruncatedOperator ek = basis_element(candidate, deg);
  // Column 0 always lies in the window and e_k(1) = x^k / k!! is nonzero.
  cell.coeff = t.at(candidate, 0) / f_coefficient(candidate, 0);
  cell.pure = true;
  for (int j = 0; j <= window && cell.pure; ++j)
    for (int i = 0; i <= deg; ++i)
      if (t.at(i, j) != cell.coeff * ek.m.at(i, j)) {
        cell.pure = false;
        break;
      }
  return cell;
}

}  // namespace

CommutationTable commutation_table(int max_index, int deg) {
  if (max_index < 0) throw std::invalid_argument("table needs a nonnegative index bound");
  if (deg < 2 * max_index + 2)
    throw std::invalid_argument("truncation degree too small for the requested table");
  CommutationTable table;
  table.max_index = max_index;
  table.deg = deg;
  const Matrix x = op_x(deg).m, d = op_ddx(deg).m;
  std::vector<Matrix> e;
  for (int k = 0; k <= max_index; ++k) e.push_back(basis_element(k, deg).m);

  table.x_bracket.assign(max_index + 1, std::vector<TableCell>(max_index + 1));
  table.d_bracket.assign(max_index + 1, std::vector<TableCell>(max_index + 1));
  TableVerdict& v = table.verdict;
  v.observed_sign_first_odd_x = 0;
  v.observed_sign_first_odd_d = 0;

  for (int m = 0; m <= max_index; ++m)
    for (int n = 0; n <= max_index; ++n) {
      const int window = deg - (m + n + 2);
      const Matrix tx = e[m] * x * e[n] - e[n] * x * e[m];
      const Matrix td = e[m] * d * e[n] - e[n] * d * e[m];
      const bool even = (m + n) % 2 == 0;
      TableCell cx = even ? classify_cell(tx, deg, window, 0)
                          : classify_cell(tx, deg, window, m + n + 1);
      TableCell cd = even ? classify_cell(td, deg, window, 0)
                          : classify_cell(td, deg, window, m + n - 1);
      if (even) {
        if (!cx.zero || !cd.zero) v.zero_iff_even_sum = false;
      } else {
        if (cx.zero || cd.zero) v.zero_iff_even_sum = false;
        if (!cx.pure || !cd.pure) v.shifts_ok = false;
        if (cx.pure && !(cx.coeff == 1 || cx.coeff == -1)) v.unit_coefficients = false;
        if (cd.pure && !(cd.coeff == 1 || cd.coeff == -1)) v.unit_coefficients = false;
        if (m % 2 == 1 && cx.pure) {
          const int s = cx.coeff > 0 ? 1 : -1;
          if (v.observed_sign_first_odd_x == 0) v.observed_sign_first_odd_x = s;
          else if (v.observed_sign_first_odd_x != s) v.observed_sign_first_odd_x = 2;  // mixed
        }
        if (m % 2 == 1 && cd.pure) {
          const int s = cd.coeff > 0 ? 1 : -1;
          if (v.observed_sign_first_odd_d == 0) v.observed_sign_first_odd_d = s;
          else if (v.observed_sign_first_odd_d != s) v.observed_sign_first_odd_d = 2;
        }
      }
      table.x_bracket[m][n] = cx;
      table.d_bracket[m][n] = cd;
    }

  // Antisymmetry of the raw matrices is exact; compare cells.
  for (int m = 0; m <= max_index && table.verdict.antisymmetric; ++m)
    for (int n = 0; n <= max_index; ++n) {
      const TableCell& a = table.x_bracket[m][n];
      const TableCell& b = table.x_bracket[n][m];
      if (a.zero != b.zero || (!a.zero && a.pure && b.pure && a.coeff != -b.coeff)) {
        table.verdict.antisymmetric = false;
        break;
      }
    }

  v.matches_tabulated_assignment =
      v.observed_sign_first_odd_x == 1 && v.observed_sign_first_odd_d == 1;
  return table;
}

}  // namespace opair
