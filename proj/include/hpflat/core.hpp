#pragma once

/**
 * @file core.hpp
 * @brief Quaternionic structure on ℂ⁸, Sp(4) utilities, and deterministic RNG.
 *
 * ℍ⁴ is modelled as ℂ⁸ with the right action of j given by the conjugate-linear
 * map  j(v) = J·v̄,  where J is block-diagonal with four 2×2 blocks [[0,−1],[1,0]].
 * A complex-linear map commutes with j exactly when it is symplectic
 * (MᵀJM = J), and Sp(4) = U(8) ∩ {symplectic}.
 */

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <random>

namespace hpflat {

using ComplexScalar = std::complex<double>;
using CVector8 = Eigen::Matrix<ComplexScalar, 8, 1>;
using CMatrix8 = Eigen::Matrix<ComplexScalar, 8, 8>;
using CVectorX = Eigen::Matrix<ComplexScalar, Eigen::Dynamic, 1>;
using CMatrixX = Eigen::Matrix<ComplexScalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Hermitian inner product ⟨x, y⟩ = Σᵢ xᵢ·conj(yᵢ), conjugate-linear in y.
inline ComplexScalar herm_inner(const CVector8& x, const CVector8& y) {
  return y.dot(x);  // Eigen's dot conjugates its object argument
}

/// The fixed symplectic form matrix: four diagonal blocks [[0,−1],[1,0]].
CMatrix8 j_block_matrix();

/// Conjugate-linear right multiplication by j:  j(v) = J·v̄.
CVector8 j_map(const CVector8& v);

/**
 * @brief Quaternion written as a complex pair q = a + b·j.
 *
 * Products follow from j·z = z̄·j for z ∈ ℂ and j² = −1:
 *   (a + b·j)(c + d·j) = (ac − b·d̄) + (ad + b·c̄)·j.
 */
struct Quaternion {
  ComplexScalar a{0.0, 0.0};
  ComplexScalar b{0.0, 0.0};

  Quaternion() = default;
  Quaternion(ComplexScalar a_, ComplexScalar b_) : a(a_), b(b_) {}

  double norm_sq() const { return std::norm(a) + std::norm(b); }
  Quaternion conjugate() const { return {std::conj(a), -b}; }
  /// Multiplicative inverse; requires norm_sq() > 0.
  Quaternion inverse() const;
};

Quaternion operator*(const Quaternion& p, const Quaternion& q);
Quaternion operator+(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p, const Quaternion& q);

using QuatVector4 = std::array<Quaternion, 4>;

/// Reinterpret v ∈ ℂ⁸ as (v₀+v₁j, v₂+v₃j, v₄+v₅j, v₆+v₇j) ∈ ℍ⁴.
QuatVector4 c8_to_h4(const CVector8& v);

/// Inverse of c8_to_h4.
CVector8 h4_to_c8(const QuatVector4& q);

/// Right-multiply every component: (h·q)ᵢ = hᵢ·q.
QuatVector4 scale_right(const QuatVector4& h, const Quaternion& q);

/**
 * @brief Representative of the quaternionic line through h with its first
 * quaternion of norm > tol normalised to 1 (right multiplication).
 */
QuatVector4 canonical_rep(const QuatVector4& h, double tol = 1e-12);

/// Structural classification of an 8×8 complex matrix, with residuals.
struct MatrixClass {
  double unitary_residual = 0.0;      ///< max |(MᴴM − I)ᵢⱼ|
  double antisymmetric_residual = 0.0;///< max |(Mᵀ + M)ᵢⱼ|
  double symplectic_residual = 0.0;   ///< max |(MᵀJM − J)ᵢⱼ|
  bool unitary = false;
  bool antisymmetric = false;
  bool symplectic = false;
};

MatrixClass matrix_class(const CMatrix8& m, double tol = 1e-10);

/**
 * @brief Deterministic random number source.
 *
 * All draws are derived from raw std::mt19937_64 output (uniforms via the
 * top 53 bits, normals via Box–Muller), so sequences are identical across
 * platforms and standard library implementations for a given seed.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal (Box–Muller, cached spare).
  double normal();

  /// Complex with independent standard normal parts.
  ComplexScalar complex_normal() {
    double re = normal();
    return {re, normal()};
  }

  /// Uniform in the axis-aligned box [re_lo,re_hi) × [im_lo,im_hi).
  ComplexScalar complex_uniform(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/**
 * @brief Deterministic Haar-like random element of Sp(4) ⊂ U(8).
 *
 * Columns are built in j-pairs (v, j(v)): each new v is a Gaussian vector
 * orthonormalised against all previous columns.  Orthogonality of v to both
 * members of an earlier pair is equivalent to quaternionic orthogonality, and
 * j-pairing of the columns makes the result commute with the j-map, i.e.
 * MᵀJM = J holds by construction.
 */
CMatrix8 random_symplectic(std::uint64_t seed);

}  // namespace hpflat
