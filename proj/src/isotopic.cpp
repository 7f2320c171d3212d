#include "opair/isotopic.hpp"

#include <stdexcept>

#include "opair/rng.hpp"

namespace opair {

MatrixPair::MatrixPair(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
    throw std::invalid_argument("pair must consist of square matrices of equal size");
  n = A.rows();
}

Matrix bracket_v1(const Matrix& x, const Matrix& y, const Matrix& a) {
  return x * a * y - y * a * x;
}

Matrix bracket_v2(const Matrix& a, const Matrix& b, const Matrix& x) {
  return a * x * b - b * x * a;
}

bool proportional(const Matrix& a, const Matrix& b) {
  const Vec va = vec(a), vb = vec(b);
  Matrix m(2, static_cast<int>(va.size()));
  for (std::size_t j = 0; j < va.size(); ++j) {
    m.at(0, static_cast<int>(j)) = va[j];
    m.at(1, static_cast<int>(j)) = vb[j];
  }
  return rank(m) <= 1;
}

Subspace annihilator(const MatrixPair& p) {
  const Matrix l = matrix_of_map(p.n, [&](const Matrix& x) { return bracket_v2(p.A, p.B, x); });
  return null_space(l);
}

Subspace normalizer(const MatrixPair& p) {
  const int n2 = p.n * p.n;
  const Matrix l = matrix_of_map(p.n, [&](const Matrix& x) { return bracket_v2(p.A, p.B, x); });
  // Rows of k span the annihilator of span(A,B) in the dual coordinates, so
  // L x in span(A,B)  <=>  k (L x) = 0.
  const Vec va = vec(p.A), vb = vec(p.B);
  Matrix span_rows(2, n2);
  for (int j = 0; j < n2; ++j) {
    span_rows.at(0, j) = va[j];
    span_rows.at(1, j) = vb[j];
  }
  const Subspace complement = null_space(span_rows);
  if (complement.dim() == 0) return Subspace::full(n2);
  Matrix k(complement.dim(), n2);
  for (int i = 0; i < complement.dim(); ++i)
    for (int j = 0; j < n2; ++j) k.at(i, j) = complement.basis()[i][j];
  return null_space(k * l);
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::ZeroQuotient: return "zero_quotient";
    case PairClass::AffLine: return "aff_line";
    case PairClass::Okubo: return "okubo";
  }
  return "?";
}

PairInvariants classify(const MatrixPair& p) {
  PairInvariants inv;
  inv.a = annihilator(p).dim();
  inv.a0 = normalizer(p).dim() - inv.a;
  inv.a0_in_range = inv.a0 >= 0 && inv.a0 <= 2;
  inv.cls = inv.a0 == 0 ? PairClass::ZeroQuotient
            : inv.a0 == 1 ? PairClass::AffLine
                          : PairClass::Okubo;
  return inv;
}

std::pair<Matrix, Matrix> closed_form_generators_2x2(const MatrixPair& p) {
  if (p.n != 2) throw std::invalid_argument("closed-form generators exist only for n = 2");
  const Rat a = p.A.at(0, 0), b = p.A.at(0, 1), c = p.A.at(1, 0), d = p.A.at(1, 1);
  const Rat e = p.B.at(0, 0), f = p.B.at(0, 1), g = p.B.at(1, 0), h = p.B.at(1, 1);
  Matrix m1(2, 2), m2(2, 2);
  m1.at(0, 0) = d * e - a * h;
  m1.at(0, 1) = a * f - b * e;
  m1.at(1, 0) = a * g - c * e;
  m2.at(0, 0) = d * g - c * h;
  m2.at(0, 1) = c * f - b * g;
  m2.at(1, 1) = a * g - c * e;
  return {m1, m2};
}

MatrixPair gl_transform(const MatrixPair& p, const Matrix& c, const Matrix& d) {
  if (!inverse(c) || !inverse(d))
    throw std::invalid_argument("gl_transform requires invertible factors");
  return MatrixPair(c * p.A * d, c * p.B * d);
}

namespace {

void record(Check& ch, bool ok, const std::string& what) {
  ++ch.samples;
  if (!ok) {
    ++ch.failures;
    ch.pass = false;
    if (ch.detail.empty()) ch.detail = what;
  }
}

}  // namespace

Report verify_pair_axioms(int n, int samples, std::uint64_t seed) {
  Report rep;
  Check& jac = rep.add("jacobi_of_pencil_bracket");
  Check& mixed1 = rep.add("mixed_identity_first_slot");
  Check& mixed2 = rep.add("mixed_identity_second_slot");
  SplitMix64 g(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix X = random_matrix(g, n), Y = random_matrix(g, n), Z = random_matrix(g, n);
    const Matrix A = random_matrix(g, n), B = random_matrix(g, n), C = random_matrix(g, n);
    const Rat alpha(g.int_in(9)), beta(g.int_in(9));
    const Matrix P = alpha * A + beta * B;

    const Matrix j = bracket_v1(bracket_v1(X, Y, P), Z, P) +
                     bracket_v1(bracket_v1(Z, X, P), Y, P) +
                     bracket_v1(bracket_v1(Y, Z, P), X, P);
    record(jac, j.is_zero(), "sample " + std::to_string(s));

    const Rat half(1, 2);
    const Matrix lhs1 = bracket_v1(X, Y, bracket_v2(A, B, Z));
    const Matrix rhs1 = half * (bracket_v1(bracket_v1(X, Z, A), Y, B) +
                                bracket_v1(bracket_v1(X, Y, A), Z, B) +
                                bracket_v1(bracket_v1(Z, Y, A), X, B) -
                                bracket_v1(bracket_v1(X, Z, B), Y, A) -
                                bracket_v1(bracket_v1(X, Y, B), Z, A) -
                                bracket_v1(bracket_v1(Z, Y, B), X, A));
    record(mixed1, lhs1 == rhs1, "sample " + std::to_string(s));

    const Matrix lhs2 = bracket_v2(A, B, bracket_v1(X, Y, C));
    const Matrix rhs2 = half * (bracket_v2(bracket_v2(A, C, X), B, Y) +
                                bracket_v2(bracket_v2(A, B, X), C, Y) +
                                bracket_v2(bracket_v2(C, B, X), A, Y) -
                                bracket_v2(bracket_v2(A, C, Y), B, X) -
                                bracket_v2(bracket_v2(A, B, Y), C, X) -
                                bracket_v2(bracket_v2(C, B, Y), A, X));
    record(mixed2, lhs2 == rhs2, "sample " + std::to_string(s));
  }
  return rep;
}

Report substructure_check(const MatrixPair& p) {
  Report rep;
  const Subspace ann = annihilator(p);
  const Subspace norm = normalizer(p);
  Check& inc = rep.add("annihilator_inside_normalizer");
  record(inc, norm.contains_subspace(ann), "containment");

  Check& dims = rep.add("quotient_dimension_bookkeeping");
  record(dims, norm.dim() - ann.dim() >= 0 && norm.dim() <= p.n * p.n, "dims");

  Check& cl_ann = rep.add("annihilator_bracket_closure");
  Check& cl_norm = rep.add("normalizer_bracket_closure");
  const Matrix* gens[2] = {&p.A, &p.B};
  for (const Matrix* a : gens) {
    for (int i = 0; i < ann.dim(); ++i)
      for (int j = i + 1; j < ann.dim(); ++j) {
        const Matrix br = bracket_v1(ann.basis_matrix(i, p.n), ann.basis_matrix(j, p.n), *a);
        record(cl_ann, ann.contains_matrix(br),
               "[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
    for (int i = 0; i < norm.dim(); ++i)
      for (int j = i + 1; j < norm.dim(); ++j) {
        const Matrix br = bracket_v1(norm.basis_matrix(i, p.n), norm.basis_matrix(j, p.n), *a);
        record(cl_norm, norm.contains_matrix(br),
               "[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
  }
  return rep;
}

}  // namespace opair
