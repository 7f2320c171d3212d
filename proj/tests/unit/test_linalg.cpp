#include <doctest.h>

#include "opair/isotopic.hpp"
#include "opair/linalg.hpp"
#include "opair/rng.hpp"

using namespace opair;

TEST_CASE("rref of the identity is the identity") {
  const RrefResult r = rref(Matrix::identity(2));
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<int>{0, 1});
  CHECK(r.r == Matrix::identity(2));
}

TEST_CASE("proportional rows collapse to rank one") {
  CHECK(rank(Matrix{{2, 4}, {1, 2}}) == 1);
}

TEST_CASE("rref of an invertible 2x2 is the identity") {
  const RrefResult r = rref(Matrix{{1, 2}, {3, 4}});
  CHECK(r.rank == 2);
  CHECK(r.r == Matrix::identity(2));
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  SplitMix64 g(7);
  for (int t = 0; t < 40; ++t) {
    const int rows = 1 + static_cast<int>(g.next() % 5);
    const int cols = 1 + static_cast<int>(g.next() % 5);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(g.int_in(9));
    const RrefResult r = rref(m);
    CHECK(rref(r.r).r == r.r);
    CHECK(r.rank + null_space(m).dim() == cols);
  }
}

TEST_CASE("null space of the zero map is everything, of the identity nothing") {
  CHECK(null_space(Matrix::zero(4, 4)).dim() == 4);
  CHECK(null_space(Matrix::identity(4)).dim() == 0);
}

TEST_CASE("null space of X -> AXB - BXA for the unit pair") {
  const Matrix a = Matrix::unit(2, 0, 0), b = Matrix::unit(2, 0, 1);
  const Matrix l = matrix_of_map(2, [&](const Matrix& x) { return bracket_v2(a, b, x); });
  const Subspace s = null_space(l);
  CHECK(s.dim() == 2);
  CHECK(s.contains_matrix(Matrix::unit(2, 0, 1)));
  CHECK(s.contains_matrix(Matrix::unit(2, 1, 1)));
  CHECK_FALSE(s.contains_matrix(Matrix::unit(2, 0, 0)));
}

TEST_CASE("membership returns coordinates exactly for members") {
  const Subspace s =
      Subspace::span_of_matrices(2, {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 1)});
  const auto c = s.coordinates(vec(Matrix::unit(2, 0, 1)));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(1));
  CHECK((*c)[1] == Rat(0));
  const auto z = s.coordinates(Vec(4));
  REQUIRE(z.has_value());
  CHECK(vec_is_zero(*z));
  CHECK_FALSE(s.coordinates(vec(Matrix::unit(2, 0, 0))).has_value());
}

TEST_CASE("membership rejects a vector of the wrong ambient dimension") {
  const Subspace s = Subspace::full(4);
  CHECK_THROWS_AS(s.coordinates(Vec(3)), std::invalid_argument);
}

TEST_CASE("subspace sums detect directness") {
  const Subspace e11 = Subspace::span_of_matrices(2, {Matrix::unit(2, 0, 0)});
  const Subspace e22 = Subspace::span_of_matrices(2, {Matrix::unit(2, 1, 1)});
  const SubspaceSum direct = subspace_sum({e11, e22});
  CHECK(direct.sum.dim() == 2);
  CHECK(direct.direct);
  const SubspaceSum repeated = subspace_sum({e11, e11});
  CHECK(repeated.sum.dim() == 1);
  CHECK_FALSE(repeated.direct);
}

TEST_CASE("canonical bases make subspace equality syntactic") {
  SplitMix64 g(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> rows;
    for (int i = 0; i < 3; ++i) {
      Vec v(5);
      for (auto& x : v) x = Rat(g.int_in(9));
      rows.push_back(v);
    }
    const Subspace s = Subspace::span_of_rows(5, rows);
    // Shuffled and rescaled generators give the same canonical object.
    std::vector<Vec> scaled;
    for (int i = 2; i >= 0; --i) scaled.push_back(vec_scale(Rat(3), rows[i]));
    CHECK(s == Subspace::span_of_rows(5, scaled));
    const SubspaceSum bigger = subspace_sum({s, Subspace::span_of_rows(5, {rows[0]})});
    CHECK(bigger.sum == s);  // S + (subset of S) = S
    // S sits inside S + T for any T
    Vec extra(5);
    for (auto& x : extra) x = Rat(g.int_in(9));
    const SubspaceSum st = subspace_sum({s, Subspace::span_of_rows(5, {extra})});
    CHECK(st.sum.contains_subspace(s));
  }
}

TEST_CASE("inverse and solvers round-trip") {
  const Matrix a{{1, 2}, {3, 4}};
  const auto ai = inverse(a);
  REQUIRE(ai.has_value());
  CHECK(a * *ai == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());

  // A F = B solvable for singular A when B lives in the right column space.
  const Matrix e11 = Matrix::unit(2, 0, 0), e12 = Matrix::unit(2, 0, 1);
  const auto f = solve_right(e11, e12);
  REQUIRE(f.has_value());
  CHECK(e11 * *f == e12);
  CHECK_FALSE(solve_left(e11, e12).has_value());
}
