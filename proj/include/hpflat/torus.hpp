#pragma once

/**
 * @file torus.hpp
 * @brief Exact decision of torus descent and period-lattice computation.
 *
 * A lift with angle data (θ₁, θ₂) and twist frequency index 3+k is doubly
 * periodic modulo the fibre exactly on the lattice
 *
 *   Λ = { x + iy :  s_j·x + (c_j − 1)·y ≡ 0 (mod π),  j ∈ {1, 2} ∪ T },
 *
 * where T = {k+3} when the twist ratio w ≠ 0 (frequency −a_k contributes the
 * row (−s_k, −c_k − 1)) and T = ∅ when w = 0.  With w = 0 the 2×2 system
 * M = [[s₁, c₁−1], [s₂, c₂−1]] is invertible for θ₁ ≠ θ₂, so Λ = π·M⁻¹ℤ² is
 * always a rank-2 lattice and the immersion descends to a torus.  With w ≠ 0
 * descent holds iff the extra congruence cuts out a finite-index sublattice,
 * which happens exactly when the sine ratio s₁/s₂ is rational — decidable in
 * exact arithmetic for angles given by rational cosines.
 *
 * All numbers here live in the ℚ-module with basis {1, s₁, s₂, s₁s₂}
 * (sin² values are rational), with canonical folding of units that happen to
 * be rational.  Every congruence is verified with zero tolerance.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hpflat/families.hpp"
#include "hpflat/rational.hpp"

namespace hpflat {

/// Angle known exactly through a rational cosine in (−1, 1); the sine is the
/// positive root of the rational 1 − cos².
class ExactAngle {
 public:
  static ExactAngle from_cos(const Rational& c);
  const Rational& cos_value() const { return cos_; }
  Rational sin_sq() const { return 1 - cos_ * cos_; }
  double radians() const;

 private:
  explicit ExactAngle(Rational c) : cos_(std::move(c)) {}
  Rational cos_;
};

/// Exact isotropy-2 angle pairs (both cosines rational when cos θ is):
/// I: (c, −c);  II: (c, 2c²−1);  III: (1−2c², −c).  Requires c ∈ (0, 1/2),
/// i.e. θ ∈ (π/3, π/2).
struct Iso2ExactAngles {
  ExactAngle theta1, theta2;
  int twist_k = 0;  ///< twist frequency index minus 3
};
Iso2ExactAngles isotropy2_exact_angles(Family fam, const Rational& cos_theta);

/// Shared exact data for a pair of angles.
struct SineContext {
  Rational c1, c2;  ///< cosines
  Rational S1, S2;  ///< sin² values
  std::optional<Rational> t1, t2;  ///< rational sines, when they exist
  std::optional<Rational> rho;     ///< rational sine ratio s₁/s₂, when it exists

  static SineContext make(const ExactAngle& a1, const ExactAngle& a2);
};

/// Element q₀ + q₁·s₁ + q₂·s₂ + q₃·s₁s₂ with exact rational coordinates.
struct Quad {
  std::array<Rational, 4> c{};

  static Quad rational(const Rational& r);
  static Quad unit(int i, const Rational& coef);
  bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_zero() const { return is_rational() && c[0] == 0; }
};

Quad operator+(const Quad& a, const Quad& b);
Quad operator-(const Quad& a, const Quad& b);
Quad mul(const Quad& a, const Quad& b, const SineContext& cx);
Quad scale(const Quad& a, const Rational& r);

/// Replace rational units by their values: s₁ → ρ·s₂ when the ratio is
/// rational, s_i → t_i when sin²θ_i is a perfect square, s₁s₂ accordingly.
Quad fold(const Quad& a, const SineContext& cx);

/// Inverse of a pure sine combination A·s₁ + B·s₂ ≠ 0 (rationalised by the
/// conjugate A·s₁ − B·s₂; the norm A²S₁ − B²S₂ must be nonzero).
Quad invert_sine_combination(const Rational& a, const Rational& b, const SineContext& cx);

struct TorusCriterion {
  bool descends = false;
  std::string reason;             ///< "w_zero" | "sine_ratio_rational_square" | "sine_ratio_not_rational_square"
  std::optional<Rational> ratio;  ///< s₁/s₂ when rational
};

/// Decide descent: w = 0 always descends; otherwise descends iff S₁/S₂ is the
/// square of a rational.
TorusCriterion torus_criterion(const ExactAngle& a1, const ExactAngle& a2, bool w_zero);

struct MatrixFormResult {
  bool descends = false;
  bool ratio_rational = false;
  bool entries_rational = false;
  std::array<Rational, 2> entries{};  ///< (−s_k, −c_k−1)·M⁻¹ when rational
};

/**
 * @brief Independent descent route through the inverse period matrix.
 *
 * Computes (−s_k, −c_k−1)·M⁻¹ exactly: in plain ℚ when s₂ is rational, else
 * in the quadratic field ℚ(σ), σ² = S₂, after writing s₁ = ρσ (requires the
 * ratio ρ ∈ ℚ; an irrational ratio makes the entries provably irrational and
 * the result false).  Descent ⟺ both entries rational.
 */
MatrixFormResult criterion_matrix_form(const ExactAngle& a1, const ExactAngle& a2, int twist_k);

/// One period vector x + iy with x, y exact over the units {π, πs₁, πs₂, πs₁s₂}.
struct LatticeVector {
  Quad x, y;  ///< coefficients; the overall factor π is implicit
};

struct LatticeBasis {
  std::array<LatticeVector, 2> vecs;
  Integer index{1};       ///< index inside the w = 0 lattice (1 when w = 0)
  Rational S1, S2;        ///< sin² values, for interpreting the units
  bool plain_rational = false;  ///< all folded components live on the π unit
  bool verified = false;        ///< every congruence re-checked exactly
};

/**
 * @brief Exact period-lattice basis.
 *
 * w = 0: the columns of π·M⁻¹ (index 1).  w ≠ 0: the finite-index sublattice
 * cut out by the twist congruence, returned in column Hermite normal form
 * with positive diagonal; requires a rational sine ratio (throws
 * std::domain_error otherwise, since no torus exists).  Every returned
 * vector is re-verified against all active congruences with zero tolerance.
 */
LatticeBasis lattice_basis(const ExactAngle& a1, const ExactAngle& a2, bool w_zero, int twist_k);

}  // namespace hpflat
