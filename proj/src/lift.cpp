#include "hpflat/lift.hpp"

#include <stdexcept>

namespace hpflat {

ExpLift::ExpLift(CVectorX freqs, Eigen::VectorXd xi, CMatrixX coeff)
    : freqs_(std::move(freqs)), xi_(std::move(xi)), coeff_(std::move(coeff)) {
  const auto n = freqs_.size();
  if (xi_.size() != n || coeff_.rows() != 8 || coeff_.cols() != n)
    throw std::invalid_argument("ExpLift: inconsistent dimensions");
  for (Eigen::Index j = 0; j < n; ++j)
    if (xi_(j) < 0.0) throw std::invalid_argument("ExpLift: negative amplitude");
}

CVectorX ExpLift::exp_column(ComplexScalar z) const {
  CVectorX e(freqs_.size());
  for (Eigen::Index j = 0; j < freqs_.size(); ++j) {
    // f z − f̄ z̄ = 2i·Im(f z): purely imaginary.
    ComplexScalar ex = freqs_(j) * z - std::conj(freqs_(j) * z);
    e(j) = std::exp(ex);
  }
  return e;
}

CVector8 ExpLift::derivative(ComplexScalar z, int order) const {
  if (order < 0) throw std::invalid_argument("ExpLift::derivative: negative order");
  CVectorX col = exp_column(z);
  for (Eigen::Index j = 0; j < freqs_.size(); ++j) {
    ComplexScalar fac = xi_(j);
    for (int k = 0; k < order; ++k) fac *= freqs_(j);
    col(j) *= fac;
  }
  return coeff_ * col;
}

CVector8 ExpLift::mixed_laplace(ComplexScalar z) const {
  CVectorX col = exp_column(z);
  for (Eigen::Index j = 0; j < freqs_.size(); ++j)
    col(j) *= -std::norm(freqs_(j)) * xi_(j);
  return coeff_ * col;
}

ExpLift ExpLift::j_image() const {
  // conj(s) negates each (purely imaginary) exponent, so the conjugate lift
  // carries frequency −f_j; J then acts on the coefficients alone.
  static const CMatrix8 j = j_block_matrix();
  return ExpLift(-freqs_, xi_, j * coeff_.conjugate());
}

ExpLift ExpLift::transformed(const CMatrix8& s) const {
  return ExpLift(freqs_, xi_, s * coeff_);
}

}  // namespace hpflat
