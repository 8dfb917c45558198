#include "hpflat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpflat {

double check_horizontal(const ExpLift& lift, ComplexScalar z) {
  CVector8 s = lift.value(z);
  CVector8 ds = lift.derivative(z, 1);
  ComplexScalar h = 0.0;
  for (int i = 0; i < 4; ++i)
    h += s(2 * i) * ds(2 * i + 1) - s(2 * i + 1) * ds(2 * i);
  return std::abs(h);
}

double check_totally_real(const ExpLift& lift, ComplexScalar z) {
  CVector8 js = j_map(lift.value(z));
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k)
    worst = std::max(worst, std::abs(herm_inner(lift.derivative(z, k), js)));
  return worst;
}

FlatIsometricReport check_flat_isometric(const ExpLift& lift, ComplexScalar z) {
  CVector8 s = lift.value(z);
  CVector8 ds = lift.derivative(z, 1);
  FlatIsometricReport rep;
  rep.norm_residual = std::abs(s.squaredNorm() - 1.0);
  ComplexScalar m1 = herm_inner(ds, s);
  rep.first_moment = std::abs(m1);
  rep.metric_value = ds.squaredNorm() - std::norm(m1);
  return rep;
}

double check_harmonic(const ExpLift& lift, ComplexScalar z) {
  CVector8 res = lift.mixed_laplace(z) + lift.value(z);
  return res.cwiseAbs().maxCoeff();
}

namespace {

/// Frame-chain state over the derivative columns D = [s, js, ∂s, ∂js, …].
struct ChainContext {
  CMatrixX gram;  // 8×8: Dᴴ·D

  ComplexScalar ip(const CVectorX& u, const CVectorX& v) const {
    return (v.adjoint() * (gram * u))(0, 0);
  }
  double nrm(const CVectorX& u) const { return std::sqrt(std::max(0.0, ip(u, u).real())); }
};

/// ∂_z as the column shift (∂^a ↦ ∂^{a+1} for both s and js chains).
CVectorX shift(const CVectorX& u) {
  CVectorX v = CVectorX::Zero(u.size());
  for (Eigen::Index i = 0; i + 2 < u.size(); ++i) v(i + 2) = u(i);
  for (Eigen::Index i = u.size() - 2; i < u.size(); ++i)
    if (std::abs(u(i)) > 0.0)
      throw std::runtime_error("isotropy_order: derivative depth exhausted");
  return v;
}

}  // namespace

IsotropyReport isotropy_order(const ExpLift& lift,
                              const std::vector<ComplexScalar>& zs, double tol) {
  if (zs.empty()) throw std::invalid_argument("isotropy_order: no sample points");
  IsotropyReport rep;
  rep.gram_norm = {0.0, 0.0, 0.0};
  ExpLift jlift = lift.j_image();

  for (ComplexScalar z : zs) {
    CMatrixX d(8, 8);
    for (int a = 0; a < 4; ++a) {
      d.col(2 * a) = lift.derivative(z, a);
      d.col(2 * a + 1) = jlift.derivative(z, a);
    }
    ChainContext cx{d.adjoint() * d};

    // φ₀ frame: orthonormalised (s, js).
    std::vector<CVectorX> frames;  // all orthonormal frame vectors built so far
    CVectorX e0 = CVectorX::Zero(8), e1 = CVectorX::Zero(8);
    e0(0) = 1.0;
    e1(1) = 1.0;
    e0 /= cx.nrm(e0);
    e1 -= e0 * cx.ip(e1, e0);
    e1 /= cx.nrm(e1);
    frames.push_back(e0);
    frames.push_back(e1);

    std::array<CVectorX, 2> f = {e0, e1};  // current bundle frame field
    for (int i = 1; i <= 3; ++i) {
      std::array<CVectorX, 2> raw = {shift(f[0]), shift(f[1])};
      // Pairing of the unprojected derivatives against φ₀ decides the order.
      double g = 0.0;
      for (const auto& rv : raw) {
        double n = cx.nrm(rv);
        if (n < 1e-14) throw std::runtime_error("isotropy_order: vanishing derivative");
        g = std::max(g, std::abs(cx.ip(rv, e0)) / n);
        g = std::max(g, std::abs(cx.ip(rv, e1)) / n);
      }
      rep.gram_norm[i - 1] = std::max(rep.gram_norm[i - 1], g);

      // Next frame: Gram–Schmidt against everything built so far.
      std::array<CVectorX, 2> nf;
      for (int a = 0; a < 2; ++a) {
        CVectorX v = raw[a];
        for (int pass = 0; pass < 2; ++pass)
          for (const auto& p : frames) v -= p * cx.ip(v, p);
        for (int b = 0; b < a; ++b) v -= nf[b] * cx.ip(v, nf[b]);
        double n = cx.nrm(v);
        if (n < 1e-8 * cx.nrm(raw[a]))
          throw std::runtime_error("isotropy_order: frame rank collapse");
        nf[a] = v / n;
      }
      frames.push_back(nf[0]);
      frames.push_back(nf[1]);
      f = nf;
    }
  }

  int order = 0;
  while (order < 3 && rep.gram_norm[order] <= tol) ++order;
  rep.order = order;
  return rep;
}

AfrReport det_afr_series(const ExpLift& lift, ComplexScalar z, double branch_tol) {
  ExpLift jlift = lift.j_image();
  CVector8 s = lift.value(z);
  CVector8 js = jlift.value(z);
  CVector8 d3s = lift.derivative(z, 3);
  CVector8 d3js = jlift.derivative(z, 3);

  AfrReport rep;
  rep.g11 = herm_inner(d3s, s);
  rep.g12 = herm_inner(d3js, s);
  rep.g21 = herm_inner(d3s, js);
  rep.g22 = herm_inner(d3js, js);
  rep.det = rep.g11 * rep.g22 - rep.g12 * rep.g21;
  rep.w_block_norm = std::max(std::abs(rep.g12), std::abs(rep.g21));
  rep.cp3_branch = rep.w_block_norm <= branch_tol;
  rep.line_det = rep.g11;
  return rep;
}

ComplexScalar det_afr_closed(const FamilyParams& p) {
  if (p.mode != Mode::Isotropy2)
    throw std::invalid_argument("det_afr_closed: closed form requires isotropy2 mode");
  double th = p.iso_theta;
  double c = std::cos(th);
  ComplexScalar b;
  switch (p.family) {
    case Family::I:
      b = 1.0 - std::cos(3.0 * th) / c;
      break;
    case Family::II:
      b = 1.0 - 2.0 * c * std::polar(1.0, 3.0 * th) + std::polar(1.0, 6.0 * th);
      break;
    case Family::III:
      b = 1.0 - 2.0 * c * std::polar(1.0, -3.0 * th) + std::polar(1.0, -6.0 * th);
      break;
  }
  double r0 = p.scal.r[0], r3 = p.scal.r[3];
  double w03 = p.pairing.w03;
  double bracket = (r0 - r3) * (r0 - r3) + 4.0 * w03 * w03 * r0 * r3;
  return -b * b * bracket;
}

double sextic_magnitude(double theta) {
  return std::abs(1.0 - 2.0 * std::cos(theta) * std::polar(1.0, 3.0 * theta) +
                  std::polar(1.0, 6.0 * theta));
}

VerificationReport run_checks(const ExpLift& lift,
                              const std::vector<std::string>& which,
                              int samples, std::uint64_t seed, double tol) {
  if (samples < 1) throw std::invalid_argument("run_checks: samples must be >= 1");
  Rng rng(seed);
  std::vector<ComplexScalar> zs(samples);
  for (auto& z : zs) z = rng.complex_uniform(-2.0, 2.0, -2.0, 2.0);

  VerificationReport rep;
  auto add = [&rep](const std::string& name, double value, double tol_, bool pass) {
    rep.checks.push_back({name, value, tol_, pass});
    rep.all_pass = rep.all_pass && pass;
  };

  for (const std::string& name : which) {
    if (name == "horizontal") {
      double worst = 0.0;
      for (auto z : zs) worst = std::max(worst, check_horizontal(lift, z));
      add(name, worst, tol, worst <= tol);
    } else if (name == "totally_real") {
      double worst = 0.0;
      for (auto z : zs) worst = std::max(worst, check_totally_real(lift, z));
      add(name, worst, tol, worst <= tol);
    } else if (name == "flat_isometric") {
      double wn = 0.0, wm1 = 0.0, wmet = 0.0;
      for (auto z : zs) {
        auto fi = check_flat_isometric(lift, z);
        wn = std::max(wn, fi.norm_residual);
        wm1 = std::max(wm1, fi.first_moment);
        wmet = std::max(wmet, std::abs(fi.metric_value - 1.0));
      }
      add("unit_norm", wn, tol, wn <= tol);
      add("first_moment", wm1, tol, wm1 <= tol);
      add("metric", wmet, tol, wmet <= tol);
    } else if (name == "harmonic") {
      double worst = 0.0;
      for (auto z : zs) worst = std::max(worst, check_harmonic(lift, z));
      add(name, worst, tol, worst <= tol);
    } else if (name == "isotropy") {
      auto iso = isotropy_order(lift, zs, 1e-8);
      add(name, static_cast<double>(iso.order), 1e-8, iso.order >= 1);
    } else if (name == "det_fr") {
      double worst = 1e300;
      for (auto z : zs) {
        auto afr = det_afr_series(lift, z);
        double mag = afr.cp3_branch ? std::abs(afr.line_det) : std::abs(afr.det);
        worst = std::min(worst, mag);
      }
      add(name, worst, 1e-12, worst > 1e-12);
    } else {
      throw std::invalid_argument("run_checks: unknown check '" + name + "'");
    }
  }
  return rep;
}

}  // namespace hpflat
