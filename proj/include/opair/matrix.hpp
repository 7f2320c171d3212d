#ifndef OPAIR_MATRIX_HPP
#define OPAIR_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "opair/rational.hpp"

namespace opair {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major storage.
///
/// Coordinate convention used throughout the project: an n-by-n matrix X is
/// flattened into a vector of length n^2 by column stacking, coordinate
/// k <-> entry (row k mod n, column k div n). Every module shares this.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
  /// Builds from nested init lists of integers, e.g. {{1,2},{3,4}}.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  /// Matrix unit E_{ij} (1-based math convention is not used: i, j are 0-based).
  static Matrix unit(int n, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Rat trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rat& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

/// Column-stacked coordinates of a square matrix (length n^2).
Vec vec(const Matrix& m);
/// Inverse of vec for an n-by-n matrix.
Matrix unvec(const Vec& v, int n);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
/// Concatenation, used for coordinates on direct sums.
Vec vec_concat(const Vec& a, const Vec& b);

}  // namespace opair

#endif
