#include "hpflat/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace hpflat {

ExactAngle ExactAngle::from_cos(const Rational& c) {
  if (!(c > -1 && c < 1))
    throw std::domain_error("ExactAngle: cosine must lie in (-1, 1), got " + c.get_str());
  return ExactAngle(c);
}

double ExactAngle::radians() const { return std::acos(cos_.get_d()); }

Iso2ExactAngles isotropy2_exact_angles(Family fam, const Rational& cos_theta) {
  if (!(cos_theta > 0 && cos_theta < Rational(1, 2)))
    throw RegionError("Gamma3(C)", {"cos theta in (0, 1/2), got " + cos_theta.get_str()});
  const Rational& c = cos_theta;
  Rational double_cos = 2 * c * c - 1;  // cos 2θ
  switch (fam) {
    case Family::I:
      return {ExactAngle::from_cos(c), ExactAngle::from_cos(-c), 0};
    case Family::II:
      return {ExactAngle::from_cos(c), ExactAngle::from_cos(double_cos), 1};
    case Family::III:
      return {ExactAngle::from_cos(-double_cos), ExactAngle::from_cos(-c), 2};
  }
  throw std::logic_error("isotropy2_exact_angles: bad family");
}

SineContext SineContext::make(const ExactAngle& a1, const ExactAngle& a2) {
  SineContext cx;
  cx.c1 = a1.cos_value();
  cx.c2 = a2.cos_value();
  cx.S1 = a1.sin_sq();
  cx.S2 = a2.sin_sq();
  cx.t1 = exact_sqrt(cx.S1);
  cx.t2 = exact_sqrt(cx.S2);
  cx.rho = exact_sqrt(cx.S1 / cx.S2);
  return cx;
}

Quad Quad::rational(const Rational& r) {
  Quad q;
  q.c[0] = r;
  return q;
}

Quad Quad::unit(int i, const Rational& coef) {
  Quad q;
  q.c.at(i) = coef;
  return q;
}

Quad operator+(const Quad& a, const Quad& b) {
  Quad q;
  for (int i = 0; i < 4; ++i) q.c[i] = a.c[i] + b.c[i];
  return q;
}

Quad operator-(const Quad& a, const Quad& b) {
  Quad q;
  for (int i = 0; i < 4; ++i) q.c[i] = a.c[i] - b.c[i];
  return q;
}

Quad scale(const Quad& a, const Rational& r) {
  Quad q;
  for (int i = 0; i < 4; ++i) q.c[i] = a.c[i] * r;
  return q;
}

Quad mul(const Quad& a, const Quad& b, const SineContext& cx) {
  // Unit products: s₁² = S₁, s₂² = S₂, s₁·s₂ = s₁s₂, s₁·s₁s₂ = S₁·s₂,
  // s₂·s₁s₂ = S₂·s₁, (s₁s₂)² = S₁S₂.
  Quad q;
  q.c[0] = a.c[0] * b.c[0] + cx.S1 * a.c[1] * b.c[1] + cx.S2 * a.c[2] * b.c[2] +
           cx.S1 * cx.S2 * a.c[3] * b.c[3];
  q.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] +
           cx.S2 * (a.c[2] * b.c[3] + a.c[3] * b.c[2]);
  q.c[2] = a.c[0] * b.c[2] + a.c[2] * b.c[0] +
           cx.S1 * (a.c[1] * b.c[3] + a.c[3] * b.c[1]);
  q.c[3] = a.c[0] * b.c[3] + a.c[3] * b.c[0] + a.c[1] * b.c[2] + a.c[2] * b.c[1];
  return q;
}

Quad fold(const Quad& a, const SineContext& cx) {
  Quad q = a;
  if (cx.t1) {  // s₁ rational: s₁ → t₁, s₁s₂ → t₁·s₂
    q.c[0] += *cx.t1 * q.c[1];
    q.c[2] += *cx.t1 * q.c[3];
    q.c[1] = 0;
    q.c[3] = 0;
  }
  if (cx.t2) {  // s₂ rational: s₂ → t₂, s₁s₂ → t₂·s₁
    q.c[0] += *cx.t2 * q.c[2];
    q.c[1] += *cx.t2 * q.c[3];
    q.c[2] = 0;
    q.c[3] = 0;
  }
  if (!cx.t1 && !cx.t2 && cx.rho) {  // s₁ → ρ·s₂, s₁s₂ → ρ·S₂
    q.c[2] += *cx.rho * q.c[1];
    q.c[0] += *cx.rho * cx.S2 * q.c[3];
    q.c[1] = 0;
    q.c[3] = 0;
  }
  return q;
}

Quad invert_sine_combination(const Rational& a, const Rational& b, const SineContext& cx) {
  Rational n = a * a * cx.S1 - b * b * cx.S2;
  if (n == 0)
    throw std::domain_error("invert_sine_combination: zero norm (degenerate angles)");
  Quad q;
  q.c[1] = a / n;
  q.c[2] = -b / n;
  return q;
}

TorusCriterion torus_criterion(const ExactAngle& a1, const ExactAngle& a2, bool w_zero) {
  TorusCriterion out;
  SineContext cx = SineContext::make(a1, a2);
  out.ratio = cx.rho;
  if (w_zero) {
    out.descends = true;
    out.reason = "w_zero";
  } else if (cx.rho) {
    out.descends = true;
    out.reason = "sine_ratio_rational_square";
  } else {
    out.descends = false;
    out.reason = "sine_ratio_not_rational_square";
  }
  return out;
}

namespace {

/// Element x + y·σ of ℚ(σ), σ² = S (S not a perfect square, so a field).
struct QE {
  Rational x, y;
};
QE qe_add(const QE& a, const QE& b) { return {a.x + b.x, a.y + b.y}; }
QE qe_sub(const QE& a, const QE& b) { return {a.x - b.x, a.y - b.y}; }
QE qe_mul(const QE& a, const QE& b, const Rational& s) {
  return {a.x * b.x + s * a.y * b.y, a.x * b.y + a.y * b.x};
}
QE qe_inv(const QE& a, const Rational& s) {
  Rational n = a.x * a.x - s * a.y * a.y;
  if (n == 0) throw std::domain_error("QE: division by zero element");
  return {a.x / n, -a.y / n};
}

/// Third congruence row (−s_k, −c_k − 1) for the twist frequency −a_k.
/// k = 0 gives (0, −2) since θ₀ = 0.
void twist_row_sigma(int k, const Rational& rho, const Rational& c1, const Rational& c2,
                     QE& r1, QE& r2) {
  switch (k) {
    case 0:
      r1 = {0, 0};
      r2 = {-2, 0};
      return;
    case 1:
      r1 = {0, -rho};  // −s₁ = −ρσ
      r2 = {-c1 - 1, 0};
      return;
    case 2:
      r1 = {0, -1};  // −s₂ = −σ
      r2 = {-c2 - 1, 0};
      return;
  }
  throw std::invalid_argument("twist row: k must be 0, 1 or 2");
}

}  // namespace

MatrixFormResult criterion_matrix_form(const ExactAngle& a1, const ExactAngle& a2, int twist_k) {
  MatrixFormResult out;
  SineContext cx = SineContext::make(a1, a2);
  if (!cx.rho) {
    // Irrational sine ratio: the entries lie outside ℚ; no descent.
    return out;
  }
  out.ratio_rational = true;
  const Rational rho = *cx.rho;

  if (cx.t2) {
    // Plain rational arithmetic: s₂ = t₂, s₁ = ρ·t₂.
    Rational s2v = *cx.t2, s1v = rho * s2v;
    Rational det = s1v * (cx.c2 - 1) - s2v * (cx.c1 - 1);
    if (det == 0) throw std::domain_error("criterion_matrix_form: equal angles");
    Rational i11 = (cx.c2 - 1) / det, i12 = (1 - cx.c1) / det;
    Rational i21 = -s2v / det, i22 = s1v / det;
    Rational r1, r2;
    switch (twist_k) {
      case 0: r1 = 0; r2 = -2; break;
      case 1: r1 = -s1v; r2 = -cx.c1 - 1; break;
      case 2: r1 = -s2v; r2 = -cx.c2 - 1; break;
      default: throw std::invalid_argument("criterion_matrix_form: k must be 0, 1 or 2");
    }
    out.entries = {r1 * i11 + r2 * i21, r1 * i12 + r2 * i22};
    out.entries_rational = true;
    out.descends = true;
    return out;
  }

  // ℚ(σ) arithmetic, σ² = S₂ irrational ⇒ genuine quadratic field.
  const Rational& s = cx.S2;
  QE m11{0, rho}, m12{cx.c1 - 1, 0}, m21{0, 1}, m22{cx.c2 - 1, 0};
  QE det = qe_sub(qe_mul(m11, m22, s), qe_mul(m12, m21, s));
  QE det_inv = qe_inv(det, s);
  // Adjugate route: M⁻¹ = [[m22, −m12], [−m21, m11]] · det⁻¹.
  QE i11 = qe_mul(m22, det_inv, s);
  QE i12 = qe_mul(QE{-m12.x, -m12.y}, det_inv, s);
  QE i21 = qe_mul(QE{-m21.x, -m21.y}, det_inv, s);
  QE i22 = qe_mul(m11, det_inv, s);

  QE r1, r2;
  twist_row_sigma(twist_k, rho, cx.c1, cx.c2, r1, r2);
  QE e1 = qe_add(qe_mul(r1, i11, s), qe_mul(r2, i21, s));
  QE e2 = qe_add(qe_mul(r1, i12, s), qe_mul(r2, i22, s));
  out.entries_rational = (e1.y == 0 && e2.y == 0);
  if (out.entries_rational) out.entries = {e1.x, e2.x};
  out.descends = out.entries_rational;
  return out;
}

namespace {

Rational quad_as_rational(const Quad& q, const char* what) {
  if (!q.is_rational())
    throw std::logic_error(std::string("expected rational value in ") + what);
  return q.c[0];
}

Integer rational_as_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1)
    throw std::logic_error(std::string("expected integer value in ") + what);
  return q.get_num();
}

/// Congruence row j ∈ {1, 2} or the twist row (j = 3) applied to a vector;
/// result is the value divided by π.
Quad congruence_value(int row, int twist_k, const SineContext& cx, const LatticeVector& v) {
  Quad sj, cj_minus;
  if (row == 1) {
    sj = Quad::unit(1, 1);
    cj_minus = Quad::rational(cx.c1 - 1);
  } else if (row == 2) {
    sj = Quad::unit(2, 1);
    cj_minus = Quad::rational(cx.c2 - 1);
  } else {
    switch (twist_k) {
      case 0:
        sj = Quad::rational(0);
        cj_minus = Quad::rational(-2);
        break;
      case 1:
        sj = Quad::unit(1, -1);
        cj_minus = Quad::rational(-cx.c1 - 1);
        break;
      case 2:
        sj = Quad::unit(2, -1);
        cj_minus = Quad::rational(-cx.c2 - 1);
        break;
      default:
        throw std::invalid_argument("congruence_value: k must be 0, 1 or 2");
    }
  }
  return fold(mul(sj, v.x, cx) + mul(cj_minus, v.y, cx), cx);
}

LatticeVector combine(const LatticeVector& a, const Integer& ca,
                      const LatticeVector& b, const Integer& cb) {
  Rational qa(ca), qb(cb);
  return {scale(a.x, qa) + scale(b.x, qb), scale(a.y, qa) + scale(b.y, qb)};
}

}  // namespace

LatticeBasis lattice_basis(const ExactAngle& a1, const ExactAngle& a2, bool w_zero, int twist_k) {
  SineContext cx = SineContext::make(a1, a2);
  if (cx.c1 == cx.c2)
    throw std::domain_error("lattice_basis: angles must be distinct");
  if (!w_zero && !cx.rho)
    throw std::domain_error(
        "lattice_basis: nonzero twist with irrational sine ratio does not descend to a torus");

  // Base lattice π·M⁻¹ℤ², M = [[s₁, c₁−1], [s₂, c₂−1]];
  // M⁻¹ = adj(M)/det with det = (c₂−1)·s₁ − (c₁−1)·s₂.
  Quad inv_det = invert_sine_combination(cx.c2 - 1, 1 - cx.c1, cx);
  LatticeVector v1{fold(mul(Quad::rational(cx.c2 - 1), inv_det, cx), cx),
                   fold(mul(Quad::unit(2, -1), inv_det, cx), cx)};
  LatticeVector v2{fold(mul(Quad::rational(1 - cx.c1), inv_det, cx), cx),
                   fold(mul(Quad::unit(1, 1), inv_det, cx), cx)};

  // Exact sanity: M·M⁻¹ = I, i.e. row_j(v_i) = δ_{ji}.
  const LatticeVector* base[2] = {&v1, &v2};
  for (int i = 0; i < 2; ++i)
    for (int row = 1; row <= 2; ++row) {
      Rational val = quad_as_rational(congruence_value(row, twist_k, cx, *base[i]),
                                      "base lattice congruence");
      if (val != (row == i + 1 ? 1 : 0))
        throw std::logic_error("lattice_basis: base lattice verification failed");
    }

  LatticeBasis out;
  out.S1 = cx.S1;
  out.S2 = cx.S2;

  if (w_zero) {
    out.vecs = {v1, v2};
    out.index = 1;
  } else {
    // Twist congruence values on the base lattice are exact rationals.
    Rational q1 = quad_as_rational(congruence_value(3, twist_k, cx, v1), "twist row");
    Rational q2 = quad_as_rational(congruence_value(3, twist_k, cx, v2), "twist row");

    Integer delta;
    mpz_lcm(delta.get_mpz_t(), q1.get_den().get_mpz_t(), q2.get_den().get_mpz_t());
    Integer alpha = rational_as_integer(q1 * Rational(delta), "alpha");
    Integer beta = rational_as_integer(q2 * Rational(delta), "beta");

    // K = {(m, n) : α·m + β·n ≡ 0 (mod δ)}; column basis in Hermite form.
    Integer g, xg, yg;
    mpz_gcdext(g.get_mpz_t(), xg.get_mpz_t(), yg.get_mpz_t(), alpha.get_mpz_t(),
               delta.get_mpz_t());
    Integer gb;
    mpz_gcd(gb.get_mpz_t(), beta.get_mpz_t(), g.get_mpz_t());
    Integer n0 = g / gb;
    Integer diag = delta / g;
    Integer c = -beta * n0;
    if (c % g != 0) throw std::logic_error("lattice_basis: congruence solvability");
    Integer m0;
    mpz_mod(m0.get_mpz_t(), Integer((c / g) * xg).get_mpz_t(), diag.get_mpz_t());

    out.vecs = {combine(v1, diag, v2, Integer(0)), combine(v1, m0, v2, n0)};
    out.index = diag * n0;

    // Independent count: [ℤ² : K] = δ / gcd(α, β, δ).
    Integer gabd;
    mpz_gcd(gabd.get_mpz_t(), g.get_mpz_t(), beta.get_mpz_t());
    if (out.index != delta / gabd)
      throw std::logic_error("lattice_basis: index cross-check failed");
  }

  // Zero-tolerance verification of every active congruence on the output.
  int rows = w_zero ? 2 : 3;
  for (const LatticeVector& v : out.vecs)
    for (int row = 1; row <= rows; ++row) {
      Rational val = quad_as_rational(congruence_value(row, twist_k, cx, v),
                                      "output congruence");
      rational_as_integer(val, "output congruence integrality");
    }
  out.verified = true;

  out.plain_rational = true;
  for (const LatticeVector& v : out.vecs)
    out.plain_rational = out.plain_rational && v.x.is_rational() && v.y.is_rational();
  return out;
}

}  // namespace hpflat
