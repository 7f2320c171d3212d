#include "opair/pseudo.hpp"

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

/// Derivative of (A,B) |-> A X B - B X A in direction (h,k).
Matrix pair_field_diff(const W2Point& pt, const Matrix& x, const Tangent& h) {
  return h.dA * x * pt.B + pt.A * x * h.dB - h.dB * x * pt.A - pt.B * x * h.dA;
}

Matrix twist(const Matrix& u, const Matrix& x, const Matrix& c) { return u * c * x - x * c * u; }

}  // namespace

W2Point::W2Point(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
    throw std::invalid_argument("W2 point must consist of square matrices of equal size");
  n = A.rows();
}

Vec tangent_vec(const Tangent& t) { return vec_concat(vec(t.dA), vec(t.dB)); }

Tangent tau_prime(const Matrix& x, const W2Point& pt) {
  return {bracket_v2(pt.A, pt.B, x), Matrix::zero(pt.n, pt.n)};
}

Tangent tau_double_prime(const Matrix& x, const W2Point& pt) {
  return {Matrix::zero(pt.n, pt.n), bracket_v2(pt.A, pt.B, x)};
}

Tangent tau_pencil(const Matrix& x, const W2Point& pt, const Rat& lambda, const Rat& mu) {
  const Matrix v = bracket_v2(pt.A, pt.B, x);
  return {lambda * v, mu * v};
}

TauTriple tau_fields(const Matrix& x, const W2Point& pt, const Rat& lambda, const Rat& mu) {
  return {tau_prime(x, pt), tau_double_prime(x, pt), tau_pencil(x, pt, lambda, mu)};
}

Tangent tau_pencil_commutator(const W2Point& pt, const Matrix& x, const Rat& lx, const Rat& mx,
                              const Matrix& y, const Rat& ly, const Rat& my) {
  const Tangent up = tau_pencil(x, pt, lx, mx);
  const Tangent vp = tau_pencil(y, pt, ly, my);
  const Matrix dv_u = pair_field_diff(pt, y, up);
  const Matrix du_v = pair_field_diff(pt, x, vp);
  return Tangent{ly * dv_u, my * dv_u} - Tangent{lx * du_v, mx * du_v};
}

namespace {

bool pencil_identity_holds(const W2Point& pt, const Matrix& x, const Matrix& y, const Rat& la,
                           const Rat& mu) {
  const Tangent lhs = tau_pencil_commutator(pt, x, la, mu, y, la, mu);
  // Structure map of the pencil member with the frozen signs:
  // m(X,Y) = eps' * lambda * [X,Y]_B + eps'' * mu * [X,Y]_A.
  const Matrix m = Rat(kEpsPrime) * la * bracket_v1(x, y, pt.B) +
                   Rat(kEpsDoublePrime) * mu * bracket_v1(x, y, pt.A);
  return lhs == tau_pencil(m, pt, la, mu);
}

}  // namespace

bool detect_signs(int n) {
  SplitMix64 g(0xD1CEULL);
  for (int t = 0; t < 4; ++t) {
    const W2Point pt(random_matrix(g, n), random_matrix(g, n));
    const Matrix x = random_matrix(g, n), y = random_matrix(g, n);
    // tau': commutator must close on +[X,Y]_B.
    const Tangent c1 = tau_pencil_commutator(pt, x, 1, 0, y, 1, 0);
    if (!(c1 == tau_prime(Rat(kEpsPrime) * bracket_v1(x, y, pt.B), pt))) return false;
    // tau'': commutator must close on -[X,Y]_A.
    const Tangent c2 = tau_pencil_commutator(pt, x, 0, 1, y, 0, 1);
    if (!(c2 == tau_double_prime(Rat(kEpsDoublePrime) * bracket_v1(x, y, pt.A), pt)))
      return false;
  }
  return true;
}

Report verify_pseudoalgebra(int n, int samples, std::uint64_t seed) {
  Report rep;
  Check& conv = rep.add("sign_convention");
  conv.detail = "commutator Dv[u]-Du[v]; structure maps +[X,Y]_B and -[X,Y]_A";
  record(conv, detect_signs(n), "fixture detection");

  Check& prime = rep.add("closure_prime");
  Check& dbl = rep.add("closure_double_prime");
  Check& pencil = rep.add("closure_pencil");
  SplitMix64 g(seed);
  for (int s = 0; s < samples; ++s) {
    const W2Point pt(random_matrix(g, n), random_matrix(g, n));
    const Matrix x = random_matrix(g, n), y = random_matrix(g, n);
    record(prime, pencil_identity_holds(pt, x, y, 1, 0), "sample " + std::to_string(s));
    record(dbl, pencil_identity_holds(pt, x, y, 0, 1), "sample " + std::to_string(s));
    for (int t = 0; t < 5; ++t) {
      Rat la(g.int_in(9)), mu(g.int_in(9));
      if (rat_is_zero(la) && rat_is_zero(mu)) la = 1;
      record(pencil, pencil_identity_holds(pt, x, y, la, mu),
             "sample " + std::to_string(s) + " lambda=" + rat_str(la) + " mu=" + rat_str(mu));
    }
  }
  return rep;
}

Report verify_pseudohybrid_compat(int n, int samples, std::uint64_t seed) {
  Report rep;
  Check& compat = rep.add("pseudohybrid_coupling");
  SplitMix64 g(seed);
  for (int s = 0; s < samples; ++s) {
    const W2Point pt(random_matrix(g, n), random_matrix(g, n));
    const Matrix x = random_matrix(g, n), y = random_matrix(g, n);
    const Tangent lhs = tau_pencil_commutator(pt, x, 1, 0, y, 0, 1) +
                        tau_pencil_commutator(pt, x, 0, 1, y, 1, 0);
    const Tangent rhs = tau_prime(Rat(kEpsDoublePrime) * bracket_v1(x, y, pt.A), pt) +
                        tau_double_prime(Rat(kEpsPrime) * bracket_v1(x, y, pt.B), pt);
    record(compat, lhs == rhs, "sample " + std::to_string(s));
  }
  return rep;
}

Subspace gl2_tangent(const W2Point& pt) {
  const int n = pt.n, n2 = n * n;
  std::vector<Vec> rows;
  rows.reserve(2 * n2);
  for (int k = 0; k < n2; ++k) {
    const Matrix u = Matrix::unit(n, k % n, k / n);
    rows.push_back(tangent_vec({u * pt.A, u * pt.B}));
    rows.push_back(tangent_vec({pt.A * u, pt.B * u}));
  }
  return Subspace::span_of_rows(2 * n2, rows);
}

Tangent equihybrid_variation(const Matrix& x, const W2Point& pt) {
  if (!annihilator(pt.pair()).contains_matrix(x))
    throw std::invalid_argument("equihybrid variation requires X in the annihilator");
  return {pt.A * x * pt.A + pt.A * x * pt.B, pt.A * x * pt.B + pt.B * x * pt.B};
}

OrbitDecomposition decomposition_check(const W2Point& pt) {
  const int n = pt.n, n2 = n * n;
  OrbitDecomposition out(2 * n2);
  std::vector<Vec> tp, td, eq;
  for (int k = 0; k < n2; ++k) {
    const Matrix u = Matrix::unit(n, k % n, k / n);
    tp.push_back(tangent_vec(tau_prime(u, pt)));
    td.push_back(tangent_vec(tau_double_prime(u, pt)));
  }
  const Subspace ann = annihilator(pt.pair());
  for (int i = 0; i < ann.dim(); ++i)
    eq.push_back(tangent_vec(equihybrid_variation(ann.basis_matrix(i, n), pt)));
  out.t_prime = Subspace::span_of_rows(2 * n2, tp);
  out.t_double_prime = Subspace::span_of_rows(2 * n2, td);
  out.equihybrid = Subspace::span_of_rows(2 * n2, eq);
  out.gl2 = gl2_tangent(pt);
  const SubspaceSum s = subspace_sum({out.t_prime, out.t_double_prime, out.equihybrid});
  out.direct = s.direct;
  out.equal = s.sum == out.gl2;
  return out;
}

Report leaf_preservation_check(const W2Point& pt, const Matrix& x) {
  const Subspace ann = annihilator(pt.pair());
  if (!ann.contains_matrix(x))
    throw std::invalid_argument("leaf preservation requires X in the annihilator");
  Report rep;
  Check& ch = rep.add("annihilator_equations_first_order_invariant");
  const Tangent d = equihybrid_variation(x, pt);
  for (int i = 0; i < ann.dim(); ++i) {
    const Matrix xp = ann.basis_matrix(i, pt.n);
    const Matrix residual =
        d.dA * xp * pt.B + pt.A * xp * d.dB - d.dB * xp * pt.A - pt.B * xp * d.dA;
    record(ch, residual.is_zero(), "basis element " + std::to_string(i));
  }
  return rep;
}

Report conservation_and_coadjoint_check(const W2Point& pt, const Rat& lambda, const Rat& mu,
                                        const Matrix& x) {
  if (rat_is_zero(lambda) && rat_is_zero(mu))
    throw std::invalid_argument("pencil parameters must not both vanish");
  Report rep;
  Check& cons = rep.add("conserved_fiber_coordinate");
  const Tangent t = tau_pencil(x, pt, lambda, mu);
  record(cons, (mu * t.dA - lambda * t.dB).is_zero(), "velocity of mu*A - lambda*B");

  Check& coad = rep.add("orbit_tangent_is_coadjoint_span");
  const int n = pt.n, n2 = n * n;
  std::vector<Vec> orbit, coadjoint;
  for (int k = 0; k < n2; ++k) {
    const Matrix u = Matrix::unit(n, k % n, k / n);
    orbit.push_back(vec(bracket_v2(pt.A, pt.B, u)));
    coadjoint.push_back(vec(pt.B * u * pt.A - pt.A * u * pt.B));
  }
  record(coad,
         Subspace::span_of_rows(n2, orbit) == Subspace::span_of_rows(n2, coadjoint),
         "span comparison");
  return rep;
}

CovariantResult covariant_derivative(const W2Point& pt, const Matrix& z1, const Matrix& z2,
                                     const Matrix& z0, const Matrix& x, const Matrix& dx) {
  const Subspace ann = annihilator(pt.pair());
  if (!ann.contains_matrix(x) || !ann.contains_matrix(z0))
    throw std::invalid_argument("covariant derivative requires X and Z0 in the annihilator");
  CovariantResult out;
  out.direction = tau_prime(z1, pt) + tau_double_prime(z2, pt) + equihybrid_variation(z0, pt);
  out.nabla = dx + twist(z1, x, pt.B) - twist(z2, x, pt.A);
  return out;
}

namespace {

Matrix section_residual(const W2Point& pt, const Tangent& dir, const Matrix& x,
                        const Matrix& dx) {
  return dir.dA * x * pt.B + pt.A * dx * pt.B + pt.A * x * dir.dB - dir.dB * x * pt.A -
         pt.B * dx * pt.A - pt.B * x * dir.dA;
}

}  // namespace

Matrix transport_residual(const W2Point& pt, const Matrix& z1, const Matrix& z2, const Matrix& z0,
                          const Matrix& x) {
  const Tangent dir =
      tau_prime(z1, pt) + tau_double_prime(z2, pt) + equihybrid_variation(z0, pt);
  const Matrix dx = -(twist(z1, x, pt.B) - twist(z2, x, pt.A));
  return section_residual(pt, dir, x, dx);
}

Matrix transport_residual_opposite_sign(const W2Point& pt, const Matrix& z1, const Matrix& z2,
                                        const Matrix& z0, const Matrix& x) {
  const Tangent dir =
      tau_prime(z1, pt) + tau_double_prime(z2, pt) + equihybrid_variation(z0, pt);
  const Matrix dx = -(twist(z1, x, pt.B) + twist(z2, x, pt.A));
  return section_residual(pt, dir, x, dx);
}

VariationCommutator variation_commutator(const W2Point& pt, const Matrix& x, const Matrix& y) {
  const Subspace ann = annihilator(pt.pair());
  if (!ann.contains_matrix(x) || !ann.contains_matrix(y))
    throw std::invalid_argument("variation commutator requires members of the annihilator");
  // Quadratic extension with frozen first argument:
  // v_X(A,B) = (AXA + AXB, AXB + BXB).
  auto value = [&](const Matrix& m, const W2Point& q) -> Tangent {
    return {q.A * m * q.A + q.A * m * q.B, q.A * m * q.B + q.B * m * q.B};
  };
  auto diff = [&](const Matrix& m, const W2Point& q, const Tangent& h) -> Tangent {
    const Matrix da = h.dA * m * q.A + q.A * m * h.dA + h.dA * m * q.B + q.A * m * h.dB;
    const Matrix db = h.dA * m * q.B + q.A * m * h.dB + h.dB * m * q.B + q.B * m * h.dB;
    return {da, db};
  };
  VariationCommutator out;
  out.residual = diff(y, pt, value(x, pt)) - diff(x, pt, value(y, pt));
  out.commute = out.residual.is_zero();
  return out;
}

GriffinReport griffin_report(const W2Point& pt) {
  GriffinReport g;
  g.dim_w1 = 2 * pt.n * pt.n;
  g.dim_ac = annihilator(pt.pair()).dim();
  g.dim_griffin = g.dim_w1 + g.dim_ac;
  const OrbitDecomposition d = decomposition_check(pt);
  g.spanned_orbit_dim =
      subspace_sum({d.t_prime, d.t_double_prime, d.equihybrid}).sum.dim();
  return g;
}

}  // namespace opair
