#pragma once

/**
 * @file moduli.hpp
 * @brief Sampling and visualisation of the admissible parameter regions.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hpflat/core.hpp"
#include "hpflat/families.hpp"
#include "hpflat/rational.hpp"

namespace hpflat {

/// Strict membership of (θ, r) in Γ₃(ℂ): π/3 < θ < π/2, 0 < r < 1/(4 sin²θ).
/// Boundary points are excluded.
bool region_contains(double theta, double r);

struct RegionPoint {
  double theta = 0.0;
  double r = 0.0;
};

/// `count` uniform points of Γ₃(ℂ), by rejection from [π/3, π/2] × [0, 1].
/// Deterministic in `seed`.
std::vector<RegionPoint> sample_region(int count, std::uint64_t seed);

/// Monte-Carlo estimate of the area of Γ₃(ℂ) with the same box; the exact
/// value is ∫ 1/(4 sin²θ) dθ = cot(π/3)/4 = 1/(4√3).
double region_area_mc(int samples, std::uint64_t seed);

/// Valid isotropy-2 parameters: (θ, r) uniform in Γ₃(ℂ), twist ratio uniform
/// in the disk |w| ≤ 4.
FamilyParams sample_isotropy2_params(Family fam, Rng& rng);

/// Valid general-position parameters: angles uniform-ordered in (0, π), free
/// weight pair in (0, 1)², twist in the disk |w| ≤ 4; rejection against the
/// full inequality set.
FamilyParams sample_general_params(Family fam, Rng& rng);

struct TorusFilterEntry {
  Rational cos_theta;
  bool descends = false;
  std::string reason;
};

/// Exact descent decision for each rational cos θ on the family's isotropy-2
/// locus (throws nothing; out-of-range cosines are reported as not
/// descending with reason "outside Gamma3(C)").
std::vector<TorusFilterEntry> torus_filter(Family fam,
                                           const std::vector<Rational>& cosines,
                                           bool w_zero);

/**
 * @brief Emit the Γ₃(ℂ) picture.
 *
 * CSV: header `theta,r,kind`, then `resolution` rows tracing the weight
 * boundary r = 1/(4 sin²θ) (kind "boundary") and `resolution` rows tracing
 * the sampling box perimeter (kind "box").  SVG: the filled region with axes.
 * Output is byte-deterministic for fixed arguments.
 */
void emit_region_plot(const std::string& csv_path, const std::string& svg_path,
                      int resolution);

}  // namespace hpflat
