#include "opair/hybrid.hpp"

#include <stdexcept>

#include "opair/rng.hpp"

namespace opair {

bool Tensor3::is_zero() const {
  for (const auto& x : e_)
    if (!rat_is_zero(x)) return false;
  return true;
}

Vec Tensor3::bracket(const Vec& u, const Vec& v) const {
  Vec out(d_);
  for (int i = 0; i < d_; ++i) {
    if (rat_is_zero(u[i])) continue;
    for (int j = 0; j < d_; ++j) {
      if (rat_is_zero(v[j])) continue;
      const Rat f = u[i] * v[j];
      for (int k = 0; k < d_; ++k) out[k] += f * at(i, j, k);
    }
  }
  return out;
}

namespace {

Tensor3 expand_bracket(const Subspace& space, const std::vector<Matrix>& basis,
                       const Matrix& param) {
  const int d = static_cast<int>(basis.size());
  Tensor3 c(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Matrix br = bracket_v1(basis[i], basis[j], param);
      const auto coords = space.coordinates(vec(br));
      if (!coords)
        throw std::logic_error("bracket left the subspace it must preserve");
      for (int k = 0; k < d; ++k) {
        c.at(i, j, k) = (*coords)[k];
        c.at(j, i, k) = -(*coords)[k];
      }
    }
  return c;
}

std::vector<Matrix> subspace_basis_matrices(const Subspace& s, int n) {
  std::vector<Matrix> out;
  out.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) out.push_back(s.basis_matrix(i, n));
  return out;
}

void record(Check& ch, bool ok, const std::string& what) {
  ++ch.samples;
  if (!ok) {
    ++ch.failures;
    ch.pass = false;
    if (ch.detail.empty()) ch.detail = what;
  }
}

bool jacobi_holds(const Tensor3& c, int* bad_i = nullptr, int* bad_j = nullptr,
                  int* bad_k = nullptr) {
  const int d = c.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rat s = 0;
          for (int m = 0; m < d; ++m)
            s += c.at(i, j, m) * c.at(m, k, l) + c.at(k, i, m) * c.at(m, j, l) +
                 c.at(j, k, m) * c.at(m, i, l);
          if (!rat_is_zero(s)) {
            if (bad_i) *bad_i = i;
            if (bad_j) *bad_j = j;
            if (bad_k) *bad_k = k;
            return false;
          }
        }
  return true;
}

Tensor3 combine(const Tensor3& a, const Tensor3& b, const Rat& la, const Rat& mb) {
  Tensor3 c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        c.at(i, j, k) = la * a.at(i, j, k) + mb * b.at(i, j, k);
  return c;
}

}  // namespace

LieHybrid hybrid_from_pair(const MatrixPair& p) {
  LieHybrid h;
  h.ambient_n = p.n;
  const Subspace ann = annihilator(p);
  h.dim = ann.dim();
  h.basis = subspace_basis_matrices(ann, p.n);
  h.c_prime = expand_bracket(ann, h.basis, p.A);
  h.c_double_prime = expand_bracket(ann, h.basis, p.B);
  return h;
}

LieHybrid centralizer_hybrid(const Matrix& f) {
  if (!f.is_square()) throw std::invalid_argument("centralizer of a non-square matrix");
  const int n = f.rows();
  LieHybrid h;
  h.ambient_n = n;
  const Matrix l = matrix_of_map(n, [&](const Matrix& x) { return x * f - f * x; });
  const Subspace cent = null_space(l);
  h.dim = cent.dim();
  h.basis = subspace_basis_matrices(cent, n);
  h.c_prime = expand_bracket(cent, h.basis, Matrix::identity(n));
  h.c_double_prime = expand_bracket(cent, h.basis, f);
  return h;
}

Report verify_hybrid(const LieHybrid& h, std::uint64_t seed) {
  Report rep;
  const int d = h.dim;

  Check& anti = rep.add("bracket_antisymmetry");
  const Tensor3* tensors[2] = {&h.c_prime, &h.c_double_prime};
  for (const Tensor3* c : tensors)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          record(anti, c->at(i, j, k) == -c->at(j, i, k), "antisymmetry");

  Check& jac1 = rep.add("jacobi_prime");
  record(jac1, jacobi_holds(h.c_prime), "jacobi of the primed bracket");
  Check& jac2 = rep.add("jacobi_double_prime");
  record(jac2, jacobi_holds(h.c_double_prime), "jacobi of the double-primed bracket");

  Check& pencil = rep.add("jacobi_of_combinations");
  SplitMix64 g(seed);
  for (int t = 0; t < 5; ++t) {
    const Rat la(g.int_in(9)), mu(g.int_in(9));
    record(pencil, jacobi_holds(combine(h.c_prime, h.c_double_prime, la, mu)),
           "lambda=" + rat_str(la) + " mu=" + rat_str(mu));
  }

  // Six-term coupling identity over all basis triples:
  // [[x,z]',y]'' + [[x,y]',z]'' + [[z,y]',x]''
  //   == [[x,z]'',y]' + [[x,y]'',z]' + [[z,y]'',x]'.
  Check& six = rep.add("six_term_coupling");
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        for (int l = 0; l < d; ++l) {
          Rat lhs = 0, rhs = 0;
          for (int m = 0; m < d; ++m) {
            lhs += h.c_prime.at(x, z, m) * h.c_double_prime.at(m, y, l) +
                   h.c_prime.at(x, y, m) * h.c_double_prime.at(m, z, l) +
                   h.c_prime.at(z, y, m) * h.c_double_prime.at(m, x, l);
            rhs += h.c_double_prime.at(x, z, m) * h.c_prime.at(m, y, l) +
                   h.c_double_prime.at(x, y, m) * h.c_prime.at(m, z, l) +
                   h.c_double_prime.at(z, y, m) * h.c_prime.at(m, x, l);
          }
          record(six, lhs == rhs,
                 "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                     std::to_string(z) + ")");
        }
  return rep;
}

Triviality triviality_report(const LieHybrid& h) {
  Triviality t;
  t.trivial = h.c_prime.is_zero() && h.c_double_prime.is_zero();
  if (t.trivial) {
    t.proportional = true;
    return t;
  }
  const auto& a = h.c_prime.flat();
  const auto& b = h.c_double_prime.flat();
  Matrix m(2, static_cast<int>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    m.at(0, static_cast<int>(k)) = a[k];
    m.at(1, static_cast<int>(k)) = b[k];
  }
  t.proportional = rank(m) <= 1;
  return t;
}

DoubleAlgebra double_kv(const LieHybrid& h) {
  const int d = h.dim;
  DoubleAlgebra out;
  out.dim = 2 * d;
  out.c = Tensor3(2 * d);
  const Rat half(1, 2);
  // Basis: (e_i, 0) for i < d, (0, e_{i-d}) for i >= d.
  for (int i = 0; i < 2 * d; ++i)
    for (int j = 0; j < 2 * d; ++j) {
      const bool ix = i < d, jx = j < d;
      const int ii = ix ? i : i - d, jj = jx ? j : j - d;
      for (int k = 0; k < d; ++k) {
        Rat first = 0, second = 0;
        if (ix && jx) first += h.c_double_prime.at(ii, jj, k);
        if (ix && !jx) first += half * h.c_prime.at(ii, jj, k);
        if (!ix && jx) first -= half * h.c_prime.at(jj, ii, k);
        if (!ix && !jx) second += h.c_prime.at(ii, jj, k);
        if (!ix && jx) second += half * h.c_double_prime.at(ii, jj, k);
        if (ix && !jx) second -= half * h.c_double_prime.at(jj, ii, k);
        out.c.at(i, j, k) = first;
        out.c.at(i, j, k + d) = second;
      }
    }
  out.antisymmetric = true;
  for (int i = 0; i < 2 * d && out.antisymmetric; ++i)
    for (int j = 0; j < 2 * d && out.antisymmetric; ++j)
      for (int k = 0; k < 2 * d; ++k)
        if (out.c.at(i, j, k) != -out.c.at(j, i, k)) {
          out.antisymmetric = false;
          break;
        }
  int bi = -1, bj = -1, bk = -1;
  out.jacobi_ok = jacobi_holds(out.c, &bi, &bj, &bk);
  if (!out.jacobi_ok) out.first_jacobi_failure = Vec{Rat(bi), Rat(bj), Rat(bk)};
  return out;
}

namespace {

/// Checks one translation map phi out of the annihilator against the
/// centralizer hybrid of factor: phi([X,Y]_A) must be the plain commutator of
/// images and phi([X,Y]_B) the factor-twisted bracket of images.
void check_translation(Report& rep, const std::string& tag, const MatrixPair& p,
                       const Subspace& ann, bool right_translation, const Matrix& factor,
                       bool expect_bijective) {
  const int n = p.n;
  auto phi = [&](const Matrix& x) { return right_translation ? x * p.A : p.A * x; };

  std::vector<Matrix> image;
  for (int i = 0; i < ann.dim(); ++i) image.push_back(phi(ann.basis_matrix(i, n)));
  const Subspace image_span = Subspace::span_of_matrices(n, image);
  const Matrix cent_map = matrix_of_map(n, [&](const Matrix& x) { return x * factor - factor * x; });
  const Subspace cent = null_space(cent_map);

  Check& brackets = rep.add(tag + "_bracket_preservation");
  for (int i = 0; i < ann.dim(); ++i)
    for (int j = i + 1; j < ann.dim(); ++j) {
      const Matrix bi = ann.basis_matrix(i, n), bj = ann.basis_matrix(j, n);
      const Matrix ui = phi(bi), uj = phi(bj);
      const bool prime_ok = phi(bracket_v1(bi, bj, p.A)) == ui * uj - uj * ui;
      const bool double_ok =
          phi(bracket_v1(bi, bj, p.B)) == ui * factor * uj - uj * factor * ui;
      record(brackets, prime_ok && double_ok,
             "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  if (expect_bijective) {
    Check& onto = rep.add(tag + "_bijective_onto_centralizer");
    record(onto, image_span == cent && image_span.dim() == ann.dim(), "image vs centralizer");
  } else {
    Check& img = rep.add(tag + "_image_summary");
    img.detail = "image dim " + std::to_string(image_span.dim()) + ", centralizer dim " +
                 std::to_string(cent.dim()) +
                 (cent.contains_subspace(image_span) ? ", image inside centralizer"
                                                     : ", image NOT inside centralizer") +
                 (image_span == cent ? ", surjective" : ", not surjective");
    record(img, true, "");
  }
}

}  // namespace

Report morphism_verify(const MatrixPair& p) {
  Report rep;
  const Subspace ann = annihilator(p);
  const auto a_inv = inverse(p.A);
  if (a_inv) {
    check_translation(rep, "right_translation", p, ann, true, *a_inv * p.B, true);
    check_translation(rep, "left_translation", p, ann, false, p.B * *a_inv, true);
    return rep;
  }
  const auto f_right = solve_right(p.A, p.B);  // A F = B, pairs with X -> X A
  const auto f_left = solve_left(p.A, p.B);    // F A = B, pairs with X -> A X
  if (!f_right && !f_left)
    throw std::invalid_argument("singular A with no translation factor solving AF=B or FA=B");
  if (f_right) check_translation(rep, "right_translation", p, ann, true, *f_right, false);
  if (f_left) check_translation(rep, "left_translation", p, ann, false, *f_left, false);
  return rep;
}

}  // namespace opair
