#include "opair/linalg.hpp"

#include <stdexcept>

namespace opair {

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.r = m;
  Matrix& r = out.r;
  const int rows = r.rows(), cols = r.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (!rat_is_zero(r.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols; ++j) swap(r.at(piv, j), r.at(lead, j));
    const Rat inv = 1 / r.at(lead, col);
    for (int j = col; j < cols; ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == lead || rat_is_zero(r.at(i, col))) continue;
      const Rat f = r.at(i, col);
      for (int j = col; j < cols; ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return m;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right shape mismatch");
  const int rows = a.rows(), n = a.cols(), k = b.cols();
  Matrix aug(rows, n + k);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < k; ++j) aug.at(i, n + j) = b.at(i, j);
  }
  const RrefResult rr = rref(aug);
  Matrix x(n, k);
  // Inconsistent iff some pivot falls in the augmented block.
  for (int p : rr.pivots)
    if (p >= n) return std::nullopt;
  for (std::size_t row = 0; row < rr.pivots.size(); ++row)
    for (int j = 0; j < k; ++j) x.at(rr.pivots[row], j) = rr.r.at(static_cast<int>(row), n + j);
  return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  const auto xt = solve_right(a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return span_of_rows(ambient, rows);
}

Subspace Subspace::span_of_rows(int ambient, const std::vector<Vec>& rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("subspace generator has wrong ambient dimension");
  Subspace s(ambient);
  if (rows.empty()) return s;
  Matrix m(static_cast<int>(rows.size()), ambient);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
  const RrefResult rr = rref(m);
  for (int i = 0; i < rr.rank; ++i) {
    Vec v(ambient);
    for (int j = 0; j < ambient; ++j) v[j] = rr.r.at(i, j);
    s.basis_.push_back(std::move(v));
  }
  return s;
}

Subspace Subspace::span_of_matrices(int n, const std::vector<Matrix>& mats) {
  std::vector<Vec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) rows.push_back(vec(m));
  return span_of_rows(n * n, rows);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("membership query has wrong ambient dimension");
  // RREF basis: the pivot coordinate of row i reads off the coefficient.
  std::vector<int> pivots(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int p = 0;
    while (rat_is_zero(basis_[i][p])) ++p;
    pivots[i] = p;
  }
  Vec coeff(basis_.size());
  Vec rem = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coeff[i] = rem[pivots[i]];
    if (!rat_is_zero(coeff[i]))
      for (int j = 0; j < ambient_; ++j) rem[j] -= coeff[i] * basis_[i][j];
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coeff;
}

bool Subspace::contains_subspace(const Subspace& s) const {
  for (const auto& row : s.basis())
    if (!contains(row)) return false;
  return true;
}

Subspace null_space(const Matrix& l) {
  const int n = l.cols();
  const RrefResult rr = rref(l);
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t row = 0; row < rr.pivots.size(); ++row)
      v[rr.pivots[row]] = -rr.r.at(static_cast<int>(row), f);
    gens.push_back(std::move(v));
  }
  return Subspace::span_of_rows(n, gens);
}

SubspaceSum subspace_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty subspace sum");
  const int ambient = parts[0].ambient();
  std::vector<Vec> rows;
  int total = 0;
  for (const auto& p : parts) {
    if (p.ambient() != ambient)
      throw std::invalid_argument("subspace sum over mismatched ambient spaces");
    total += p.dim();
    for (const auto& r : p.basis()) rows.push_back(r);
  }
  SubspaceSum out{Subspace::span_of_rows(ambient, rows), false};
  out.direct = out.sum.dim() == total;
  return out;
}

}  // namespace opair
