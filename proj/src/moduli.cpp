#include "hpflat/moduli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hpflat/torus.hpp"

namespace hpflat {

bool region_contains(double theta, double r) {
  if (!(theta > M_PI / 3.0 && theta < M_PI / 2.0)) return false;
  return r > 0.0 && r < iso2_weight_bound(theta);
}

std::vector<RegionPoint> sample_region(int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("sample_region: negative count");
  Rng rng(seed);
  std::vector<RegionPoint> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    double theta = rng.uniform(M_PI / 3.0, M_PI / 2.0);
    double r = rng.uniform();
    if (region_contains(theta, r)) pts.push_back({theta, r});
  }
  return pts;
}

double region_area_mc(int samples, std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("region_area_mc: samples must be positive");
  Rng rng(seed);
  long hits = 0;
  for (int i = 0; i < samples; ++i) {
    double theta = rng.uniform(M_PI / 3.0, M_PI / 2.0);
    double r = rng.uniform();
    if (region_contains(theta, r)) ++hits;
  }
  return (M_PI / 6.0) * static_cast<double>(hits) / static_cast<double>(samples);
}

namespace {

ComplexScalar sample_twist(Rng& rng) {
  for (;;) {
    ComplexScalar w = rng.complex_uniform(-4.0, 4.0, -4.0, 4.0);
    if (std::abs(w) <= 4.0) return w;
  }
}

}  // namespace

FamilyParams sample_isotropy2_params(Family fam, Rng& rng) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    double theta = rng.uniform(M_PI / 3.0, M_PI / 2.0);
    double r = rng.uniform();
    if (!region_contains(theta, r)) continue;
    return make_isotropy2(fam, theta, r, sample_twist(rng));
  }
  throw std::runtime_error("sample_isotropy2_params: rejection budget exhausted");
}

FamilyParams sample_general_params(Family fam, Rng& rng) {
  for (int attempt = 0; attempt < 200000; ++attempt) {
    double t1 = rng.uniform(0.0, M_PI);
    double t2 = rng.uniform(0.0, M_PI);
    if (t1 == t2) continue;
    if (t1 > t2) std::swap(t1, t2);
    double fa = rng.uniform();
    double fb = rng.uniform();
    ComplexScalar w = sample_twist(rng);
    try {
      return make_general(fam, t1, t2, fa, fb, w);
    } catch (const RegionError&) {
      continue;  // outside the inequality set; redraw
    }
  }
  throw std::runtime_error("sample_general_params: rejection budget exhausted");
}

std::vector<TorusFilterEntry> torus_filter(Family fam,
                                           const std::vector<Rational>& cosines,
                                           bool w_zero) {
  std::vector<TorusFilterEntry> out;
  out.reserve(cosines.size());
  for (const Rational& c : cosines) {
    TorusFilterEntry e;
    e.cos_theta = c;
    try {
      Iso2ExactAngles ang = isotropy2_exact_angles(fam, c);
      TorusCriterion crit = torus_criterion(ang.theta1, ang.theta2, w_zero);
      e.descends = crit.descends;
      e.reason = crit.reason;
    } catch (const RegionError&) {
      e.descends = false;
      e.reason = "outside Gamma3(C)";
    }
    out.push_back(e);
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void emit_region_plot(const std::string& csv_path, const std::string& svg_path,
                      int resolution) {
  if (resolution < 8)
    throw std::invalid_argument("emit_region_plot: resolution must be >= 8");

  const double t_lo = M_PI / 3.0, t_hi = M_PI / 2.0;
  const double r_box = 1.0;  // sampling box height

  // --- CSV: boundary curve + sampling box perimeter ---
  {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("emit_region_plot: cannot write " + csv_path);
    csv << "theta,r,kind\n";
    for (int i = 0; i < resolution; ++i) {
      double t = t_lo + (t_hi - t_lo) * i / (resolution - 1);
      csv << fmt(t) << ',' << fmt(iso2_weight_bound(t)) << ",boundary\n";
    }
    // Rectangle perimeter, resolution points, counter-clockwise from (t_lo, 0).
    for (int i = 0; i < resolution; ++i) {
      double u = 4.0 * i / resolution;
      double t, r;
      if (u < 1.0) {
        t = t_lo + (t_hi - t_lo) * u;
        r = 0.0;
      } else if (u < 2.0) {
        t = t_hi;
        r = r_box * (u - 1.0);
      } else if (u < 3.0) {
        t = t_hi - (t_hi - t_lo) * (u - 2.0);
        r = r_box;
      } else {
        t = t_lo;
        r = r_box * (4.0 - u);
      }
      csv << fmt(t) << ',' << fmt(r) << ",box\n";
    }
  }

  // --- SVG: filled region under the boundary curve ---
  {
    const int w = 600, h = 600, ml = 70, mr = 20, mt = 20, mb = 50;
    const double r_top = 0.35;  // vertical extent of the picture
    auto px = [&](double t) { return ml + (t - t_lo) / (t_hi - t_lo) * (w - ml - mr); };
    auto py = [&](double r) { return h - mb - r / r_top * (h - mt - mb); };

    std::ofstream svg(svg_path);
    if (!svg) throw std::runtime_error("emit_region_plot: cannot write " + svg_path);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    svg << "<path d=\"M " << fmt(px(t_lo)) << ' ' << fmt(py(0.0));
    for (int i = 0; i < resolution; ++i) {
      double t = t_lo + (t_hi - t_lo) * i / (resolution - 1);
      svg << " L " << fmt(px(t)) << ' ' << fmt(py(iso2_weight_bound(t)));
    }
    svg << " L " << fmt(px(t_hi)) << ' ' << fmt(py(0.0))
        << " Z\" fill=\"#4682b4\" fill-opacity=\"0.35\" stroke=\"#2f4f6f\" "
           "stroke-width=\"1.5\"/>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
        << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    const char* tick_names[3] = {"pi/3", "5pi/12", "pi/2"};
    for (int i = 0; i < 3; ++i) {
      double t = t_lo + i * (t_hi - t_lo) / 2.0;
      svg << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << h - mb << "\" x2=\""
          << fmt(px(t)) << "\" y2=\"" << h - mb + 6 << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << fmt(px(t)) << "\" y=\"" << h - mb + 22
          << "\" font-size=\"13\" text-anchor=\"middle\">" << tick_names[i]
          << "</text>\n";
    }
    for (double r = 0.0; r <= r_top + 1e-9; r += 0.1) {
      svg << "<line x1=\"" << ml - 6 << "\" y1=\"" << fmt(py(r)) << "\" x2=\"" << ml
          << "\" y2=\"" << fmt(py(r)) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << ml - 10 << "\" y=\"" << fmt(py(r) + 4)
          << "\" font-size=\"13\" text-anchor=\"end\">" << fmt(r) << "</text>\n";
    }
    svg << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
        << "\" font-size=\"14\" text-anchor=\"middle\">theta</text>\n"
        << "<text x=\"18\" y=\"" << (mt + h - mb) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (mt + h - mb) / 2 << ")\">r</text>\n"
        << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << mt + 16
        << "\" font-size=\"15\" text-anchor=\"middle\">Gamma3(C): r &lt; 1/(4 "
           "sin^2 theta)</text>\n"
        << "</svg>\n";
  }
}

}  // namespace hpflat
