#pragma once

/**
 * @file lift.hpp
 * @brief Exponential horizontal lifts ℂ → S¹⁵ ⊂ ℂ⁸ and their exact derivatives.
 *
 * Every lift handled here has the single-exponential-per-slot form
 *
 *     s(z) = C · diag(ξ) · ( e^{f_j z − f̄_j z̄} )_{j},   C ∈ ℂ^{8×n},
 *
 * with each row of C supported on one frequency, so |s(z)|² = Σ_j ξ_j²·‖C·e_j‖²
 * is independent of z.  The exponent f_j z − f̄_j z̄ is purely imaginary, hence
 * every exponential factor has unit modulus.  z-derivatives act diagonally
 * (∂_z ↦ diag(f_j)), which keeps all derivative evaluations closed-form.
 *
 * The class is closed under the quaternionic structure map: j∘s is again an
 * exponential lift with coefficients J·C̄ and frequencies −f_j (conjugation
 * negates each purely imaginary exponent), and under any constant linear
 * transform S·s.
 */

#include "hpflat/core.hpp"

namespace hpflat {

class ExpLift {
 public:
  /**
   * @param freqs   n frequencies f_j (unit modulus for the constructions here)
   * @param xi      n nonnegative amplitudes ξ_j; the weights are r_j = ξ_j²
   * @param coeff   8×n slot coefficients
   */
  ExpLift(CVectorX freqs, Eigen::VectorXd xi, CMatrixX coeff);

  int frequency_count() const { return static_cast<int>(freqs_.size()); }
  const CVectorX& freqs() const { return freqs_; }
  const Eigen::VectorXd& xi() const { return xi_; }
  const CMatrixX& coeff() const { return coeff_; }

  /// s(z).
  CVector8 value(ComplexScalar z) const { return derivative(z, 0); }

  /// ∂_z^order s(z), exact (order ≥ 0).
  CVector8 derivative(ComplexScalar z, int order) const;

  /// ∂_z ∂_z̄ s(z) = −C·diag(|f_j|²·ξ_j)·(exponentials); exact.
  CVector8 mixed_laplace(ComplexScalar z) const;

  /// The lift of j∘s (coefficients J·C̄, frequencies −f).
  ExpLift j_image() const;

  /// The lift of S·s for a constant matrix S.
  ExpLift transformed(const CMatrix8& s) const;

 private:
  CVectorX freqs_;
  Eigen::VectorXd xi_;
  CMatrixX coeff_;

  CVectorX exp_column(ComplexScalar z) const;
};

}  // namespace hpflat
