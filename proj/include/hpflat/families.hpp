#pragma once

/**
 * @file families.hpp
 * @brief Three families of totally real flat minimal immersions ℂ → ℍP³,
 *        built as horizontal exponential lifts into S¹⁵ ⊂ ℂ⁸.
 *
 * Each lift uses six unit frequencies a₀ = 1, a₁ = e^{iθ₁}, a₂ = e^{iθ₂},
 * a_{k+3} = −a_k (0 < θ₁ < θ₂ < π) with positive weights r₀,…,r₅ subject to
 *
 *   Σ r_j = 1   (unit sphere),     Σ a_j r_j = 0   (centred first moment),
 *
 * plus one per-family product relation that normalises two of the three
 * pairing moduli |w₀₃|, |w₁₄|, |w₂₅| to 1.  The remaining modulus is strictly
 * below 1, which frees one quaternionic slot to carry a twist parameter
 * w ∈ ℂ (the ratio a/b of the twist quaternion a + b·j):
 *
 *   family I:   |w₁₄| = |w₂₅| = 1, |w₀₃| < 1, twist on frequency 3;
 *   family II:  |w₀₃| = |w₂₅| = 1, |w₁₄| < 1, twist on frequency 4;
 *   family III: |w₀₃| = |w₁₄| = 1, |w₂₅| < 1, twist on frequency 5.
 *
 * The free weight pair is (r₂, r₅) for family I and (r₀, r₃) for families
 * II and III; the other four weights are affine in the free pair.
 *
 * The isotropy-2 specialisation additionally imposes Σ a_j² r_j = 0, which
 * pins the angles per family —
 *
 *   I: (θ₁,θ₂) = (θ, π−θ),   II: (θ, 2θ),   III: (π−2θ, π−θ)
 *
 * — and restricts (θ, r) to the region Γ₃(ℂ):
 * θ ∈ (π/3, π/2), r ∈ (0, 1/(4 sin²θ)), the second free weight being
 * 1/(4 sin²θ) − r.
 */

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpflat/core.hpp"
#include "hpflat/lift.hpp"

namespace hpflat {

enum class Family { I, II, III };
enum class Mode { General, Isotropy2 };

std::string to_string(Family f);
std::string to_string(Mode m);

/// Thrown when requested parameters leave the admissible region; carries the
/// violated strict inequalities by name.
class RegionError : public std::runtime_error {
 public:
  RegionError(std::string region, std::vector<std::string> violations);
  const std::string& region() const { return region_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::string region_;
  std::vector<std::string> violations_;
};

/// Frequencies (1, e^{iθ₁}, e^{iθ₂}, −1, −e^{iθ₁}, −e^{iθ₂}).
std::array<ComplexScalar, 6> frequency_set(double theta1, double theta2);

/// Angles, their sines/cosines, the cross term □ = sin(θ₁−θ₂) < 0, and all
/// six weights (free pair + derived).
struct DerivedScalars {
  double theta1 = 0.0, theta2 = 0.0;
  double c1 = 0.0, s1 = 0.0, c2 = 0.0, s2 = 0.0;
  double box = 0.0;  ///< s₁c₂ − c₁s₂ = sin(θ₁ − θ₂)
  std::array<double, 6> r{};
};

/**
 * @brief Solve the weight relations for one family.
 *
 * The free pair is (r₂, r₅) for family I and (r₀, r₃) for families II/III.
 * Throws RegionError if the angle ordering fails or any derived weight is
 * not strictly positive.
 */
DerivedScalars derive_scalars(Family fam, double theta1, double theta2,
                              double free_a, double free_b);

/// Pairing coefficients (the nonzero entries of the antisymmetric form
/// W = CᵀJC, up to sign): w₀₃ is taken positive, w₁₄ and w₂₅ follow from the
/// centred-first-moment (horizontality) system and are real.
struct PairingSolution {
  double w03 = 0.0, w14 = 0.0, w25 = 0.0;
};

/**
 * @brief Given the scalars and the modulus of w₀₃, return the unique real
 * solution of  Σ_l w_l ξ^l ξ^{l+3} a_l = 0.
 */
PairingSolution solve_pairing(const DerivedScalars& sc, double w03_mod);

struct FamilyParams {
  Family family = Family::I;
  Mode mode = Mode::General;
  DerivedScalars scal;
  ComplexScalar w{0.0, 0.0};  ///< twist ratio a/b
  PairingSolution pairing;
  double b_mod = 0.0;   ///< twist normaliser √((1−W²)/(1+|w|²)), W the sub-unit modulus
  int twist_slot = 0;   ///< frequency index 3+k carrying the twist (k = 0,1,2)
  double iso_theta = 0.0, iso_r = 0.0;  ///< Γ₃ coordinates (Isotropy2 mode only)
};

/// General-position parameters from angles and the family's free weight pair.
FamilyParams make_general(Family fam, double theta1, double theta2,
                          double free_a, double free_b, ComplexScalar w);

/// Upper weight bound 1/(4 sin²θ) of the region Γ₃(ℂ).
double iso2_weight_bound(double theta);

/// Isotropy-2 parameters from the Γ₃(ℂ) coordinates (θ, r).
FamilyParams make_isotropy2(Family fam, double theta, double r, ComplexScalar w);

/// Names of all violated strict inequalities (empty ⟺ admissible).
std::vector<std::string> validate_params(const FamilyParams& p);

/// Assemble the 8-component horizontal lift.
ExpLift build_family_lift(const FamilyParams& p);

/**
 * @brief Pinned reference lifts inside ℂP³ ⊂ ℍP³ (complex slots only, so the
 * pairing form W vanishes identically).
 *
 * "clifford": frequencies i^k, k = 0..3, equal weights 1/4 — all moments of
 * order 1..3 vanish.  "eighth": frequencies e^{ikπ/4}, k = 0..3, equal
 * weights 1/4 — the four frequencies lie in a half-plane, so the first
 * moment is provably nonzero (|Σ a_k|/4 = √(4+2√2)/4); it is constructed
 * exactly as pinned and reported as computed.
 */
ExpLift reference_cp3(const std::string& name);

/// Fibre projection ℂ⁸ ⊃ S¹⁵ → ℍ⁴: four quaternionic components.
QuatVector4 twistor_project(const CVector8& v);

}  // namespace hpflat
