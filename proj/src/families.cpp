#include "hpflat/families.hpp"

#include <cmath>
#include <sstream>

namespace hpflat {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "; ";
    os << parts[i];
  }
  return os.str();
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
  }
  return "?";
}

std::string to_string(Mode m) {
  return m == Mode::General ? "general" : "isotropy2";
}

RegionError::RegionError(std::string region, std::vector<std::string> violations)
    : std::runtime_error("outside " + region + ": " + join(violations)),
      region_(std::move(region)),
      violations_(std::move(violations)) {}

std::array<ComplexScalar, 6> frequency_set(double theta1, double theta2) {
  ComplexScalar a1 = std::polar(1.0, theta1);
  ComplexScalar a2 = std::polar(1.0, theta2);
  return {ComplexScalar(1.0, 0.0), a1, a2,
          ComplexScalar(-1.0, 0.0), -a1, -a2};
}

DerivedScalars derive_scalars(Family fam, double theta1, double theta2,
                              double free_a, double free_b) {
  std::vector<std::string> bad;
  if (!(theta1 > 0.0)) bad.push_back("theta1 > 0");
  if (!(theta1 < theta2)) bad.push_back("theta1 < theta2");
  if (!(theta2 < M_PI)) bad.push_back("theta2 < pi");
  if (!bad.empty()) throw RegionError("angle range", bad);

  DerivedScalars sc;
  sc.theta1 = theta1;
  sc.theta2 = theta2;
  sc.c1 = std::cos(theta1);
  sc.s1 = std::sin(theta1);
  sc.c2 = std::cos(theta2);
  sc.s2 = std::sin(theta2);
  sc.box = sc.s1 * sc.c2 - sc.c1 * sc.s2;  // = sin(θ₁−θ₂) < 0 for θ₁ < θ₂

  const double bx = sc.box;
  auto& r = sc.r;
  switch (fam) {
    case Family::I: {
      // free (r₂, r₅); |w₁₄| = |w₂₅| = 1 branch: r₁ = (s₂/s₁)r₅, r₄ = (s₂/s₁)r₂.
      r[2] = free_a;
      r[5] = free_b;
      r[1] = sc.s2 * r[5] / sc.s1;
      r[4] = sc.s2 * r[2] / sc.s1;
      double sum25 = r[2] + r[5], dif25 = r[2] - r[5];
      r[0] = 0.5 * (1.0 - (1.0 + sc.s2 / sc.s1) * sum25 - (bx / sc.s1) * dif25);
      r[3] = 0.5 * (1.0 - (1.0 + sc.s2 / sc.s1) * sum25 + (bx / sc.s1) * dif25);
      break;
    }
    case Family::II: {
      // free (r₀, r₃); |w₀₃| = |w₂₅| = 1 branch: r₂ = (−s₁/□)r₀, r₅ = (−s₁/□)r₃.
      r[0] = free_a;
      r[3] = free_b;
      r[2] = -sc.s1 * r[0] / bx;
      r[5] = -sc.s1 * r[3] / bx;
      double sum03 = r[0] + r[3], dif03 = r[0] - r[3];
      r[1] = 0.5 * (1.0 - (1.0 - sc.s1 / bx) * sum03 + (sc.s2 / bx) * dif03);
      r[4] = 0.5 * (1.0 - (1.0 - sc.s1 / bx) * sum03 - (sc.s2 / bx) * dif03);
      break;
    }
    case Family::III: {
      // free (r₀, r₃); |w₀₃| = |w₁₄| = 1 branch: r₄ = (−s₂/□)r₀, r₁ = (−s₂/□)r₃.
      r[0] = free_a;
      r[3] = free_b;
      r[4] = -sc.s2 * r[0] / bx;
      r[1] = -sc.s2 * r[3] / bx;
      double sum03 = r[0] + r[3], dif03 = r[0] - r[3];
      r[2] = 0.5 * (1.0 - (1.0 - sc.s2 / bx) * sum03 - (sc.s1 / bx) * dif03);
      r[5] = 0.5 * (1.0 - (1.0 - sc.s2 / bx) * sum03 + (sc.s1 / bx) * dif03);
      break;
    }
  }

  for (int j = 0; j < 6; ++j) {
    if (!(r[j] > 0.0)) {
      std::ostringstream os;
      os << "r" << j << " > 0 (got " << r[j] << ")";
      bad.push_back(os.str());
    }
  }
  if (!bad.empty()) throw RegionError("family " + to_string(fam) + " weight region", bad);
  return sc;
}

PairingSolution solve_pairing(const DerivedScalars& sc, double w03_mod) {
  // Σ_l w_l ξ^l ξ^{l+3} a_l = 0 is solved by the real ratios
  //   w₁₄/w₀₃ = (ξ⁰ξ³/ξ¹ξ⁴)·s₂/□,   w₂₅/w₀₃ = −(ξ⁰ξ³/ξ²ξ⁵)·s₁/□,
  // since □ + s₂e^{iθ₁} − s₁e^{iθ₂} = 0 identically.
  const auto& r = sc.r;
  double x03 = std::sqrt(r[0] * r[3]);
  double x14 = std::sqrt(r[1] * r[4]);
  double x25 = std::sqrt(r[2] * r[5]);
  PairingSolution w;
  w.w03 = w03_mod;
  w.w14 = w03_mod * (x03 / x14) * (sc.s2 / sc.box);
  w.w25 = -w03_mod * (x03 / x25) * (sc.s1 / sc.box);
  return w;
}

namespace {

/// Modulus of w₀₃ that makes the family's two designated pairing moduli
/// equal to 1 (families II/III: exactly 1; family I: strictly below 1 inside
/// the region).
double family_w03_mod(Family fam, const DerivedScalars& sc) {
  if (fam != Family::I) return 1.0;
  const auto& r = sc.r;
  return -sc.box * std::sqrt(r[2] * r[5]) / (sc.s1 * std::sqrt(r[0] * r[3]));
}

double subunit_modulus(Family fam, const PairingSolution& w) {
  switch (fam) {
    case Family::I: return std::abs(w.w03);
    case Family::II: return std::abs(w.w14);
    case Family::III: return std::abs(w.w25);
  }
  return 0.0;
}

FamilyParams assemble(Family fam, Mode mode, const DerivedScalars& sc, ComplexScalar w) {
  FamilyParams p;
  p.family = fam;
  p.mode = mode;
  p.scal = sc;
  p.w = w;
  p.pairing = solve_pairing(sc, family_w03_mod(fam, sc));
  p.twist_slot = 3 + static_cast<int>(fam);
  double sub = subunit_modulus(fam, p.pairing);
  if (!(sub < 1.0)) {
    std::ostringstream os;
    os << "pairing modulus |w" << (p.twist_slot - 3) << (p.twist_slot) << "| < 1 (got " << sub << ")";
    throw RegionError("family " + to_string(fam) + " pairing region", {os.str()});
  }
  p.b_mod = std::sqrt((1.0 - sub * sub) / (1.0 + std::norm(w)));
  return p;
}

}  // namespace

FamilyParams make_general(Family fam, double theta1, double theta2,
                          double free_a, double free_b, ComplexScalar w) {
  return assemble(fam, Mode::General, derive_scalars(fam, theta1, theta2, free_a, free_b), w);
}

double iso2_weight_bound(double theta) {
  double s = std::sin(theta);
  return 1.0 / (4.0 * s * s);
}

FamilyParams make_isotropy2(Family fam, double theta, double r, ComplexScalar w) {
  std::vector<std::string> bad;
  if (!(theta > M_PI / 3.0 && theta < M_PI / 2.0))
    bad.push_back("theta in (pi/3, pi/2)");
  double bound = iso2_weight_bound(theta);
  if (!(r > 0.0 && r < bound)) {
    std::ostringstream os;
    os << "r in (0, 1/(4 sin^2 theta)) = (0, " << bound << ")";
    bad.push_back(os.str());
  }
  if (!bad.empty()) throw RegionError("Gamma3(C)", bad);

  // Second free weight: the complementary value; angle locus per family makes
  // the second moment Σ a_j² r_j vanish.
  double rb = bound - r;
  double theta1 = 0.0, theta2 = 0.0;
  switch (fam) {
    case Family::I: theta1 = theta; theta2 = M_PI - theta; break;
    case Family::II: theta1 = theta; theta2 = 2.0 * theta; break;
    case Family::III: theta1 = M_PI - 2.0 * theta; theta2 = M_PI - theta; break;
  }
  FamilyParams p = assemble(fam, Mode::Isotropy2,
                            derive_scalars(fam, theta1, theta2, r, rb), w);
  p.iso_theta = theta;
  p.iso_r = r;
  return p;
}

std::vector<std::string> validate_params(const FamilyParams& p) {
  std::vector<std::string> bad;
  const auto& sc = p.scal;
  if (!(sc.theta1 > 0.0)) bad.push_back("theta1 > 0");
  if (!(sc.theta1 < sc.theta2)) bad.push_back("theta1 < theta2");
  if (!(sc.theta2 < M_PI)) bad.push_back("theta2 < pi");
  double sum = 0.0;
  for (int j = 0; j < 6; ++j) {
    sum += sc.r[j];
    if (!(sc.r[j] > 0.0 && sc.r[j] < 1.0)) {
      std::ostringstream os;
      os << "r" << j << " in (0, 1)";
      bad.push_back(os.str());
    }
  }
  if (std::abs(sum - 1.0) > 1e-12) bad.push_back("sum r_j = 1");
  double sub = subunit_modulus(p.family, p.pairing);
  if (!(sub > 0.0 && sub < 1.0)) bad.push_back("sub-unit pairing modulus in (0, 1)");
  if (p.mode == Mode::Isotropy2) {
    if (!(p.iso_theta > M_PI / 3.0 && p.iso_theta < M_PI / 2.0))
      bad.push_back("Gamma3(C): theta in (pi/3, pi/2)");
    if (!(p.iso_r > 0.0 && p.iso_r < iso2_weight_bound(p.iso_theta)))
      bad.push_back("Gamma3(C): r in (0, 1/(4 sin^2 theta))");
  }
  return bad;
}

ExpLift build_family_lift(const FamilyParams& p) {
  auto freqs = frequency_set(p.scal.theta1, p.scal.theta2);
  CVectorX f(6);
  Eigen::VectorXd xi(6);
  for (int j = 0; j < 6; ++j) {
    f(j) = freqs[j];
    xi(j) = std::sqrt(p.scal.r[j]);
  }
  CMatrixX c = CMatrixX::Zero(8, 6);
  c(0, 0) = 1.0;
  c(1, 3) = -p.pairing.w03;
  c(2, 1) = 1.0;
  c(3, 4) = -p.pairing.w14;
  c(4, 2) = 1.0;
  c(5, 5) = -p.pairing.w25;
  c(6, p.twist_slot) = p.w * p.b_mod;
  c(7, p.twist_slot) = p.b_mod;
  return ExpLift(f, xi, c);
}

ExpLift reference_cp3(const std::string& name) {
  CVectorX f(4);
  if (name == "clifford") {
    for (int k = 0; k < 4; ++k) f(k) = std::polar(1.0, k * M_PI / 2.0);
  } else if (name == "eighth") {
    for (int k = 0; k < 4; ++k) f(k) = std::polar(1.0, k * M_PI / 4.0);
  } else {
    throw std::invalid_argument("reference_cp3: unknown reference '" + name + "'");
  }
  Eigen::VectorXd xi = Eigen::VectorXd::Constant(4, 0.5);
  CMatrixX c = CMatrixX::Zero(8, 4);
  for (int k = 0; k < 4; ++k) c(2 * k, k) = 1.0;  // complex slots only
  return ExpLift(f, xi, c);
}

QuatVector4 twistor_project(const CVector8& v) { return c8_to_h4(v); }

}  // namespace hpflat
