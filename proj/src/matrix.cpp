#include "opair/matrix.hpp"

#include <stdexcept>

namespace opair {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  e_.resize(static_cast<std::size_t>(rows_) * cols_);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged matrix initializer");
    int j = 0;
    for (long v : r) at(i, j++) = Rat(v);
    ++i;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::unit(int n, int i, int j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!rat_is_zero(x)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rat s = 0;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch in +");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch in -");
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = -a.e_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix dimension mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (rat_is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator*(const Rat& c, const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Vec vec(const Matrix& m) {
  const int n = m.rows();
  Vec v(static_cast<std::size_t>(n) * m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(j) * n + i] = m.at(i, j);
  return v;
}

Matrix unvec(const Vec& v, int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = v[static_cast<std::size_t>(j) * n + i];
  return m;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!rat_is_zero(x)) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = c * a[k];
  return r;
}

Vec vec_concat(const Vec& a, const Vec& b) {
  Vec c;
  c.reserve(a.size() + b.size());
  c.insert(c.end(), a.begin(), a.end());
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

}  // namespace opair
