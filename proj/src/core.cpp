#include "hpflat/core.hpp"

#include <cmath>
#include <stdexcept>

namespace hpflat {

CMatrix8 j_block_matrix() {
  CMatrix8 j = CMatrix8::Zero();
  for (int b = 0; b < 4; ++b) {
    j(2 * b, 2 * b + 1) = ComplexScalar(-1.0, 0.0);
    j(2 * b + 1, 2 * b) = ComplexScalar(1.0, 0.0);
  }
  return j;
}

CVector8 j_map(const CVector8& v) {
  static const CMatrix8 j = j_block_matrix();
  return j * v.conjugate();
}

Quaternion Quaternion::inverse() const {
  double n = norm_sq();
  if (n <= 0.0) throw std::domain_error("Quaternion::inverse: zero quaternion");
  Quaternion c = conjugate();
  return {c.a / n, c.b / n};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * std::conj(q.b), p.a * q.b + p.b * std::conj(q.a)};
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b};
}

QuatVector4 c8_to_h4(const CVector8& v) {
  QuatVector4 h;
  for (int i = 0; i < 4; ++i) h[i] = Quaternion(v(2 * i), v(2 * i + 1));
  return h;
}

CVector8 h4_to_c8(const QuatVector4& q) {
  CVector8 v;
  for (int i = 0; i < 4; ++i) {
    v(2 * i) = q[i].a;
    v(2 * i + 1) = q[i].b;
  }
  return v;
}

QuatVector4 scale_right(const QuatVector4& h, const Quaternion& q) {
  QuatVector4 out;
  for (int i = 0; i < 4; ++i) out[i] = h[i] * q;
  return out;
}

QuatVector4 canonical_rep(const QuatVector4& h, double tol) {
  for (int i = 0; i < 4; ++i) {
    if (h[i].norm_sq() > tol * tol) return scale_right(h, h[i].inverse());
  }
  throw std::domain_error("canonical_rep: all components below tolerance");
}

MatrixClass matrix_class(const CMatrix8& m, double tol) {
  static const CMatrix8 j = j_block_matrix();
  MatrixClass c;
  c.unitary_residual = (m.adjoint() * m - CMatrix8::Identity()).cwiseAbs().maxCoeff();
  c.antisymmetric_residual = (m.transpose() + m).cwiseAbs().maxCoeff();
  c.symplectic_residual = (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
  c.unitary = c.unitary_residual <= tol;
  c.antisymmetric = c.antisymmetric_residual <= tol;
  c.symplectic = c.symplectic_residual <= tol;
  return c;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box–Muller on raw 53-bit uniforms; 1−u keeps the log argument in (0,1].
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

CMatrix8 random_symplectic(std::uint64_t seed) {
  Rng rng(seed);
  CMatrix8 m;
  int built = 0;  // columns already fixed
  for (int pair = 0; pair < 4; ++pair) {
    CVector8 v;
    // Rejection on near-dependence is cheap insurance; in practice one draw suffices.
    for (int attempt = 0; attempt < 64; ++attempt) {
      for (int i = 0; i < 8; ++i) v(i) = rng.complex_normal();
      for (int c = 0; c < built; ++c) v -= m.col(c) * herm_inner(v, m.col(c));
      double n = v.norm();
      if (n > 1e-6) {
        v /= n;
        break;
      }
      if (attempt == 63) throw std::runtime_error("random_symplectic: degenerate draw");
    }
    // One re-orthogonalisation pass tightens residuals to ~1e-16.
    for (int c = 0; c < built; ++c) v -= m.col(c) * herm_inner(v, m.col(c));
    v.normalize();
    m.col(built) = v;
    m.col(built + 1) = j_map(v);
    built += 2;
  }
  return m;
}

}  // namespace hpflat
