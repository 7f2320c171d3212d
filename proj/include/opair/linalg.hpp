#ifndef OPAIR_LINALG_HPP
#define OPAIR_LINALG_HPP

#include <optional>
#include <vector>

#include "opair/matrix.hpp"

namespace opair {

struct RrefResult {
  Matrix r;
  int rank = 0;
  std::vector<int> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The pivot in
/// each column is the first nonzero entry scanning rows top-down, so the
/// output is the unique canonical RREF of the row space.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// One solution X of A*X = B (free variables set to zero), or nullopt when
/// the system is inconsistent. A may be rectangular.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);
/// One solution X of X*A = B, or nullopt.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

/// A linear subspace of Q^ambient held as the RREF basis of its row span.
/// The representation is canonical: two Subspace values describe the same
/// subspace iff they compare equal member-wise.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);
  static Subspace span_of_rows(int ambient, const std::vector<Vec>& rows);
  /// Span of square matrices under the shared column-stacking coordinates.
  static Subspace span_of_matrices(int n, const std::vector<Matrix>& mats);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// Basis element as an n-by-n matrix; requires ambient == n*n.
  Matrix basis_matrix(int i, int n) const { return unvec(basis_[i], n); }

  /// Coordinates of v in the canonical basis iff v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  bool contains_matrix(const Matrix& m) const { return contains(vec(m)); }
  bool contains_subspace(const Subspace& s) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_;
  std::vector<Vec> basis_;
};

/// Basis of {v : L v = 0}, canonicalized.
Subspace null_space(const Matrix& l);

struct SubspaceSum {
  Subspace sum;
  bool direct = false;  // dim(sum) == sum of part dims
};

SubspaceSum subspace_sum(const std::vector<Subspace>& parts);

/// Matrix of a linear map Q^{n^2} -> Q^{n^2} given by m |-> f(m) on square
/// matrices, columns indexed by the matrix-unit basis in vec order.
template <typename F>
Matrix matrix_of_map(int n, F&& f) {
  Matrix l(n * n, n * n);
  for (int k = 0; k < n * n; ++k) {
    const Matrix img = f(Matrix::unit(n, k % n, k / n));
    const Vec col = vec(img);
    for (int r = 0; r < n * n; ++r) l.at(r, k) = col[r];
  }
  return l;
}

}  // namespace opair

#endif
