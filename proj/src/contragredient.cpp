#include "opair/contragredient.hpp"

#include <stdexcept>

#include "opair/rng.hpp"

namespace opair {

namespace {

void record(Check& ch, bool ok, const std::string& what) {
  ++ch.samples;
  if (!ok) {
    ++ch.failures;
    ch.pass = false;
    if (ch.detail.empty()) ch.detail = what;
  }
}

Matrix coordinate_unit(int n, int k) { return Matrix::unit(n, k % n, k / n); }

}  // namespace

Rat omega(const Matrix& a, const Matrix& b, const Matrix& x, const Matrix& y) {
  return trace_pairing(bracket_v1(x, y, b), a);
}

Report verify_contragredience(int n, int samples, std::uint64_t seed) {
  Report rep;
  Check& chain = rep.add("pairing_chain_equality");
  SplitMix64 g(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix A = random_matrix(g, n), B = random_matrix(g, n);
    const Matrix X = random_matrix(g, n), Y = random_matrix(g, n);
    const Rat e1 = trace_pairing(bracket_v1(X, Y, B), A);
    const Rat e2 = -trace_pairing(bracket_v1(X, Y, A), B);
    const Rat e3 = trace_pairing(bracket_v2(A, B, X), Y);
    const Rat e4 = -trace_pairing(bracket_v2(A, B, Y), X);
    record(chain, e1 == e2 && e2 == e3 && e3 == e4, "sample " + std::to_string(s));
  }
  return rep;
}

OmegaData omega_form(const MatrixPair& p) {
  const int n2 = p.n * p.n;
  OmegaData out{p, Matrix(n2, n2)};
  std::vector<Matrix> units;
  for (int k = 0; k < n2; ++k) units.push_back(coordinate_unit(p.n, k));
  for (int i = 0; i < n2; ++i)
    for (int j = i + 1; j < n2; ++j) {
      const Rat v = omega(p.A, p.B, units[i], units[j]);
      out.form.at(i, j) = v;
      out.form.at(j, i) = -v;
    }
  return out;
}

Report omega_kernel_crosscheck(const MatrixPair& p) {
  Report rep;
  const OmegaData od = omega_form(p);

  Check& anti = rep.add("form_antisymmetric");
  record(anti, od.form == -od.form.transpose(), "form matrix");

  Check& ker = rep.add("form_kernel_equals_annihilator");
  const Subspace from_form = null_space(od.form);
  const Subspace direct = annihilator(p);
  record(ker, from_form == direct,
         "kernel dim " + std::to_string(from_form.dim()) + " vs annihilator dim " +
             std::to_string(direct.dim()));

  Check& even = rep.add("codimension_even");
  const int codim = rank(od.form);
  record(even, codim % 2 == 0, "codim " + std::to_string(codim));
  even.detail = "codim " + std::to_string(codim);
  return rep;
}

const char* pairing_convention_name(PairingConvention c) {
  switch (c) {
    case PairingConvention::Determinant: return "determinant";
    case PairingConvention::HalfDeterminant: return "half_determinant";
    case PairingConvention::TransposeDeterminant: return "transpose_determinant";
  }
  return "?";
}

int wedge_dim(int m) { return m * (m - 1) / 2; }

int wedge_index(int p, int q, int m) {
  // lexicographic over pairs p < q
  return p * m - p * (p + 1) / 2 + (q - p - 1);
}

namespace {

/// Gram matrix of the wedge-square pairing between the two coordinate slots,
/// over wedge pairs of matrix units.
Matrix wedge_gram(int n, PairingConvention conv) {
  const int n2 = n * n;
  std::vector<Matrix> units;
  for (int k = 0; k < n2; ++k) units.push_back(coordinate_unit(n, k));
  Matrix pair1(n2, n2);
  for (int p = 0; p < n2; ++p)
    for (int q = 0; q < n2; ++q)
      pair1.at(p, q) = conv == PairingConvention::TransposeDeterminant
                           ? trace_pairing(units[p], units[q].transpose())
                           : trace_pairing(units[p], units[q]);
  const int w = wedge_dim(n2);
  Matrix g(w, w);
  const Rat scale = conv == PairingConvention::HalfDeterminant ? Rat(1, 2) : Rat(1);
  for (int p = 0; p < n2; ++p)
    for (int q = p + 1; q < n2; ++q)
      for (int r = 0; r < n2; ++r)
        for (int s = r + 1; s < n2; ++s)
          g.at(wedge_index(p, q, n2), wedge_index(r, s, n2)) =
              scale * (pair1.at(p, r) * pair1.at(q, s) - pair1.at(p, s) * pair1.at(q, r));
  return g;
}

/// O[(pq)][(rs)] = omega(U_r, U_s; U_p, U_q): rows index wedge pairs in the
/// first slot, columns wedge pairs in the second.
Matrix omega_wedge_matrix(int n) {
  const int n2 = n * n;
  std::vector<Matrix> units;
  for (int k = 0; k < n2; ++k) units.push_back(coordinate_unit(n, k));
  const int w = wedge_dim(n2);
  Matrix o(w, w);
  for (int p = 0; p < n2; ++p)
    for (int q = p + 1; q < n2; ++q)
      for (int r = 0; r < n2; ++r)
        for (int s = r + 1; s < n2; ++s)
          o.at(wedge_index(p, q, n2), wedge_index(r, s, n2)) =
              omega(units[r], units[s], units[p], units[q]);
  return o;
}

}  // namespace

std::pair<ROperator, ROperator> build_R(int n, PairingConvention conv) {
  if (n < 2) throw std::invalid_argument("wedge squares need n >= 2");
  const Matrix g = wedge_gram(n, conv);
  const Matrix o = omega_wedge_matrix(n);
  const auto g_inv = inverse(g);
  if (!g_inv) throw std::logic_error("degenerate wedge pairing");
  // pairing(u, w) = u^T G w; <R1 u, w> = u^T O w and <u, R2 w> = u^T O w give
  // R1^T G = O and G R2 = O.
  ROperator r1{1, conv, (o * *g_inv).transpose()};
  ROperator r2{2, conv, *g_inv * o};
  return {r1, r2};
}

Report verify_R_defining(int n, PairingConvention conv) {
  Report rep;
  const auto [r1, r2] = build_R(n, conv);
  const Matrix g = wedge_gram(n, conv);
  const Matrix o = omega_wedge_matrix(n);
  Check& def1 = rep.add("first_defining_system");
  record(def1, r1.op.transpose() * g == o, pairing_convention_name(conv));
  Check& def2 = rep.add("second_defining_system");
  record(def2, g * r2.op == o, pairing_convention_name(conv));
  Check& adj = rep.add("mutual_adjointness");
  record(adj, r1.op.transpose() * g == g * r2.op, pairing_convention_name(conv));
  return rep;
}

RVerdict analyze_R(const ROperator& r1) {
  RVerdict v;
  v.convention = r1.convention;
  const Matrix sq = r1.op * r1.op;
  const int w = sq.rows();
  v.squares_to_minus_id = sq == Rat(-1) * Matrix::identity(w);
  bool scalar = true;
  const Rat c = sq.at(0, 0);
  for (int i = 0; i < w && scalar; ++i)
    for (int j = 0; j < w; ++j)
      if (sq.at(i, j) != (i == j ? c : Rat(0))) {
        scalar = false;
        break;
      }
  if (scalar) v.squares_to_scalar = c;
  v.detail = v.squares_to_minus_id ? "R^2 = -id"
             : scalar              ? "R^2 = (" + rat_str(c) + ") id"
                                   : "R^2 is not a scalar";
  return v;
}

Report kirillov_crosscheck(const MatrixPair& p, int samples, std::uint64_t seed) {
  if (!inverse(p.A)) throw std::invalid_argument("kirillov crosscheck requires invertible A");
  Report rep;
  Check& right = rep.add("coadjoint_form_right_map");
  Check& left = rep.add("coadjoint_form_left_map");
  right.detail = "global sign -1";
  left.detail = "global sign -1";
  const Matrix a_inv = *inverse(p.A);
  const Matrix f_right = a_inv * p.B;
  const Matrix f_left = p.B * a_inv;
  SplitMix64 g(seed);
  for (int s = 0; s < samples; ++s) {
    const Matrix X = random_matrix(g, p.n), Y = random_matrix(g, p.n);
    const Rat om = omega(p.A, p.B, X, Y);
    const Matrix ur = X * p.A, vr = Y * p.A;
    record(right, om == -(f_right * (ur * vr - vr * ur)).trace(), "sample " + std::to_string(s));
    const Matrix ul = p.A * X, vl = p.A * Y;
    record(left, om == -(f_left * (ul * vl - vl * ul)).trace(), "sample " + std::to_string(s));
  }
  return rep;
}

}  // namespace opair
