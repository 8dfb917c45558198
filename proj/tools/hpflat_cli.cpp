// Command line front end: construct lifts, certify their defining properties,
// decide torus descent exactly, and sample/plot the parameter region.
//
// Exit codes: 0 = success (including any computed yes/no decision),
//             1 = usage, schema, or region error,
//             2 = a requested certification check exceeded its tolerance.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hpflat/core.hpp"
#include "hpflat/families.hpp"
#include "hpflat/lift.hpp"
#include "hpflat/moduli.hpp"
#include "hpflat/rational.hpp"
#include "hpflat/torus.hpp"
#include "hpflat/verify.hpp"

using nlohmann::ordered_json;
namespace hp = hpflat;

namespace {

[[noreturn]] void die_schema(const std::string& path, const std::string& msg) {
  std::cerr << "schema error at " << path << ": " << msg << "\n";
  std::exit(1);
}

[[noreturn]] void die_region(const hp::RegionError& e) {
  std::cerr << "region error: parameters outside " << e.region() << "\n";
  for (const auto& v : e.violations()) std::cerr << "  violated: " << v << "\n";
  std::exit(1);
}

double expect_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) die_schema(path, "expected a number");
  return j.get<double>();
}

std::string expect_string(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) die_schema(path, "expected a string");
  return j.get<std::string>();
}

void expect_keys(const ordered_json& j, const std::string& path,
                 const std::vector<std::string>& allowed) {
  if (!j.is_object()) die_schema(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || (it.key() == k);
    if (!ok) die_schema(path + "." + it.key(), "unknown field");
  }
}

struct AngleSpec {
  double radians = 0.0;
  std::optional<hp::Rational> exact_cos;
};

AngleSpec parse_angle(const ordered_json& j, const std::string& path) {
  expect_keys(j, path, {"radians", "cos"});
  bool has_rad = j.contains("radians"), has_cos = j.contains("cos");
  if (has_rad == has_cos)
    die_schema(path, "exactly one of \"radians\" (number) or \"cos\" (rational string) required");
  AngleSpec a;
  if (has_rad) {
    a.radians = expect_number(j["radians"], path + ".radians");
  } else {
    if (!j["cos"].is_string())
      die_schema(path + ".cos", "expected a rational string \"p/q\" (floats are not exact)");
    hp::Rational c;
    try {
      c = hp::rational_from_string(j["cos"].get<std::string>());
    } catch (const std::exception& e) {
      die_schema(path + ".cos", e.what());
    }
    if (!(c > -1 && c < 1)) die_schema(path + ".cos", "cosine must lie in (-1, 1)");
    a.exact_cos = c;
    a.radians = std::acos(c.get_d());
  }
  return a;
}

double parse_weight(const ordered_json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return hp::rational_from_string(j.get<std::string>()).get_d();
    } catch (const std::exception& e) {
      die_schema(path, e.what());
    }
  }
  die_schema(path, "expected a number or rational string");
}

hp::ComplexScalar parse_twist(const ordered_json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  die_schema(path, "expected [re, im] or a number");
}

struct ParsedParams {
  bool is_reference = false;
  std::string reference;
  hp::Family fam = hp::Family::I;
  hp::Mode mode = hp::Mode::General;
  std::optional<hp::FamilyParams> params;
  std::optional<hp::Rational> exact_cos_theta;                 // isotropy2
  std::optional<std::array<hp::Rational, 2>> exact_cos_pair;   // general
  hp::ComplexScalar w{0.0, 0.0};
  ordered_json echo;  // normalised input for certificates
};

hp::Family parse_family(const std::string& s, const std::string& path) {
  if (s == "I") return hp::Family::I;
  if (s == "II") return hp::Family::II;
  if (s == "III") return hp::Family::III;
  die_schema(path, "expected \"I\", \"II\" or \"III\"");
}

ParsedParams parse_params_json(const ordered_json& root) {
  ParsedParams out;
  if (!root.is_object()) die_schema("$", "expected an object");

  if (root.contains("reference")) {
    expect_keys(root, "$", {"reference"});
    out.is_reference = true;
    out.reference = expect_string(root["reference"], "$.reference");
    if (out.reference != "clifford" && out.reference != "eighth")
      die_schema("$.reference", "expected \"clifford\" or \"eighth\"");
    out.echo = ordered_json{{"reference", out.reference}};
    return out;
  }

  expect_keys(root, "$",
              {"family", "mode", "theta", "r", "theta1", "theta2", "weights", "w"});
  if (!root.contains("family")) die_schema("$.family", "required field missing");
  if (!root.contains("mode")) die_schema("$.mode", "required field missing");
  out.fam = parse_family(expect_string(root["family"], "$.family"), "$.family");
  std::string mode = expect_string(root["mode"], "$.mode");
  if (mode != "general" && mode != "isotropy2")
    die_schema("$.mode", "expected \"general\" or \"isotropy2\"");
  out.mode = mode == "general" ? hp::Mode::General : hp::Mode::Isotropy2;
  if (root.contains("w")) out.w = parse_twist(root["w"], "$.w");

  out.echo = ordered_json{{"family", hp::to_string(out.fam)}, {"mode", mode}};

  try {
    if (out.mode == hp::Mode::Isotropy2) {
      if (!root.contains("theta")) die_schema("$.theta", "required field missing");
      if (!root.contains("r")) die_schema("$.r", "required field missing");
      if (root.contains("theta1") || root.contains("theta2") || root.contains("weights"))
        die_schema("$", "isotropy2 mode takes \"theta\" and \"r\", not general fields");
      AngleSpec th = parse_angle(root["theta"], "$.theta");
      double r = parse_weight(root["r"], "$.r");
      out.exact_cos_theta = th.exact_cos;
      out.params = hp::make_isotropy2(out.fam, th.radians, r, out.w);
      out.echo["theta"] = root["theta"];
      out.echo["r"] = root["r"];
    } else {
      if (!root.contains("theta1")) die_schema("$.theta1", "required field missing");
      if (!root.contains("theta2")) die_schema("$.theta2", "required field missing");
      if (!root.contains("weights")) die_schema("$.weights", "required field missing");
      if (root.contains("theta") || root.contains("r"))
        die_schema("$", "general mode takes \"theta1\"/\"theta2\", not \"theta\"/\"r\"");
      AngleSpec t1 = parse_angle(root["theta1"], "$.theta1");
      AngleSpec t2 = parse_angle(root["theta2"], "$.theta2");
      const char* wa = out.fam == hp::Family::I ? "r2" : "r0";
      const char* wb = out.fam == hp::Family::I ? "r5" : "r3";
      expect_keys(root["weights"], "$.weights", {wa, wb});
      if (!root["weights"].contains(wa) || !root["weights"].contains(wb))
        die_schema("$.weights", std::string("family needs the free pair {\"") + wa +
                                    "\", \"" + wb + "\"}");
      double fa = parse_weight(root["weights"][wa], std::string("$.weights.") + wa);
      double fb = parse_weight(root["weights"][wb], std::string("$.weights.") + wb);
      if (t1.exact_cos && t2.exact_cos)
        out.exact_cos_pair = {{*t1.exact_cos, *t2.exact_cos}};
      out.params = hp::make_general(out.fam, t1.radians, t2.radians, fa, fb, out.w);
      out.echo["theta1"] = root["theta1"];
      out.echo["theta2"] = root["theta2"];
      out.echo["weights"] = root["weights"];
    }
  } catch (const hp::RegionError& e) {
    die_region(e);
  }
  out.echo["w"] = ordered_json::array({out.w.real(), out.w.imag()});
  return out;
}

ParsedParams load_params(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open params file: " << file << "\n";
    std::exit(1);
  }
  ordered_json root;
  try {
    in >> root;
  } catch (const std::exception& e) {
    std::cerr << "params file is not valid JSON: " << e.what() << "\n";
    std::exit(1);
  }
  return parse_params_json(root);
}

hp::ExpLift lift_of(const ParsedParams& p) {
  if (p.is_reference) return hp::reference_cp3(p.reference);
  return hp::build_family_lift(*p.params);
}

ordered_json json_complex(hp::ComplexScalar z) {
  return ordered_json::array({z.real(), z.imag()});
}

hp::ComplexScalar parse_point(const std::string& text) {
  double re = 0, im = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf", &re, &im) != 2) {
    std::cerr << "expected a sample point as \"re,im\", got: " << text << "\n";
    std::exit(1);
  }
  return {re, im};
}

ordered_json certificate(const std::string& command, const ParsedParams& p) {
  return ordered_json{{"tool", {{"name", "hpflat"}, {"version", "1.0.0"}}},
                      {"command", command},
                      {"input", p.echo}};
}

void emit(const ordered_json& doc, const std::string& output) {
  std::string text = doc.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write output file: " << output << "\n";
      std::exit(1);
    }
    out << text;
  }
}

ordered_json quad_json(const hp::Quad& q) {
  return ordered_json{{"pi", hp::to_string(q.c[0])},
                      {"pi_s1", hp::to_string(q.c[1])},
                      {"pi_s2", hp::to_string(q.c[2])},
                      {"pi_s1_s2", hp::to_string(q.c[3])}};
}

double quad_value(const hp::Quad& q, const hp::Rational& s1sq, const hp::Rational& s2sq) {
  double v1 = std::sqrt(s1sq.get_d()), v2 = std::sqrt(s2sq.get_d());
  return q.c[0].get_d() + q.c[1].get_d() * v1 + q.c[2].get_d() * v2 +
         q.c[3].get_d() * v1 * v2;
}

/// Exact angle data for the torus/lattice commands; exits with a schema error
/// when the request needs exactness the input does not carry.
struct ExactAngleData {
  hp::ExactAngle a1, a2;
  int twist_k;
};

ExactAngleData exact_angles_of(const ParsedParams& p) {
  if (p.is_reference) {
    std::cerr << "reference lifts carry no family angle data\n";
    std::exit(1);
  }
  if (p.mode == hp::Mode::Isotropy2) {
    if (!p.exact_cos_theta)
      die_schema("$.theta", "exact decision requires {\"cos\": \"p/q\"}; floats are refused");
    auto ang = hp::isotropy2_exact_angles(p.fam, *p.exact_cos_theta);
    return {ang.theta1, ang.theta2, ang.twist_k};
  }
  if (!p.exact_cos_pair)
    die_schema("$.theta1", "exact decision requires {\"cos\": \"p/q\"}; floats are refused");
  return {hp::ExactAngle::from_cos((*p.exact_cos_pair)[0]),
          hp::ExactAngle::from_cos((*p.exact_cos_pair)[1]),
          static_cast<int>(p.fam)};
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_construct(const std::string& params_file, const std::string& z_text,
                  const std::string& output) {
  ParsedParams p = load_params(params_file);
  hp::ExpLift lift = lift_of(p);
  hp::ComplexScalar z = parse_point(z_text);

  ordered_json doc = certificate("construct", p);
  ordered_json rep;
  rep["frequencies"] = ordered_json::array();
  for (int j = 0; j < lift.frequency_count(); ++j)
    rep["frequencies"].push_back(json_complex(lift.freqs()(j)));
  rep["weights"] = ordered_json::array();
  for (int j = 0; j < lift.frequency_count(); ++j)
    rep["weights"].push_back(lift.xi()(j) * lift.xi()(j));
  if (p.params) {
    rep["pairing"] = {{"w03", p.params->pairing.w03},
                      {"w14", p.params->pairing.w14},
                      {"w25", p.params->pairing.w25}};
    rep["b_mod"] = p.params->b_mod;
    rep["twist_frequency"] = p.params->twist_slot;
  }
  rep["z"] = json_complex(z);
  hp::CVector8 s = lift.value(z);
  rep["value"] = ordered_json::array();
  for (int i = 0; i < 8; ++i) rep["value"].push_back(json_complex(s(i)));
  hp::QuatVector4 h = hp::twistor_project(s);
  rep["quaternionic"] = ordered_json::array();
  for (const auto& q : h)
    rep["quaternionic"].push_back(
        ordered_json::array({q.a.real(), q.a.imag(), q.b.real(), q.b.imag()}));
  hp::QuatVector4 canon = hp::canonical_rep(h);
  rep["canonical"] = ordered_json::array();
  for (const auto& q : canon)
    rep["canonical"].push_back(
        ordered_json::array({q.a.real(), q.a.imag(), q.b.real(), q.b.imag()}));
  doc["report"] = rep;
  emit(doc, output);
  return 0;
}

int cmd_verify(const std::string& params_file, double tol, int samples,
               std::uint64_t seed, const std::string& checks_csv,
               const std::string& output) {
  ParsedParams p = load_params(params_file);
  hp::ExpLift lift = lift_of(p);

  std::vector<std::string> checks;
  {
    std::string item;
    std::istringstream is(checks_csv);
    while (std::getline(is, item, ',')) {
      if (!item.empty()) checks.push_back(item);
    }
  }

  hp::VerificationReport rep;
  try {
    rep = hp::run_checks(lift, checks, samples, seed, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  ordered_json doc = certificate("verify", p);
  doc["input"]["tol"] = tol;
  doc["input"]["samples"] = samples;
  doc["input"]["seed"] = seed;
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.checks)
    arr.push_back(ordered_json{
        {"name", c.name}, {"value", c.value}, {"tol", c.tol}, {"pass", c.pass}});
  doc["report"] = {{"checks", arr}};
  doc["pass"] = rep.all_pass;
  emit(doc, output);
  return rep.all_pass ? 0 : 2;
}

int cmd_isotropy(const std::string& params_file, double tol, int samples,
                 std::uint64_t seed, int expect, const std::string& output) {
  ParsedParams p = load_params(params_file);
  hp::ExpLift lift = lift_of(p);

  hp::Rng rng(seed);
  std::vector<hp::ComplexScalar> zs(samples);
  for (auto& z : zs) z = rng.complex_uniform(-2.0, 2.0, -2.0, 2.0);
  hp::IsotropyReport rep = hp::isotropy_order(lift, zs, tol);

  ordered_json doc = certificate("isotropy", p);
  doc["input"]["tol"] = tol;
  doc["input"]["samples"] = samples;
  doc["input"]["seed"] = seed;
  doc["report"] = {{"order", rep.order},
                   {"gram_norm", ordered_json::array({rep.gram_norm[0], rep.gram_norm[1],
                                                      rep.gram_norm[2]})}};
  bool pass = expect < 0 || rep.order == expect;
  if (expect >= 0) {
    doc["report"]["expected"] = expect;
    doc["report"]["match"] = pass;
  }
  doc["pass"] = pass;
  emit(doc, output);
  return pass ? 0 : 2;
}

int cmd_det_fr(const std::string& params_file, const std::string& z_text, double tol,
               const std::string& output) {
  ParsedParams p = load_params(params_file);
  hp::ExpLift lift = lift_of(p);
  hp::ComplexScalar z = parse_point(z_text);

  hp::AfrReport afr = hp::det_afr_series(lift, z);
  ordered_json doc = certificate("det-fr", p);
  doc["input"]["z"] = json_complex(z);
  doc["input"]["tol"] = tol;
  ordered_json rep;
  rep["gram"] = ordered_json::array({json_complex(afr.g11), json_complex(afr.g12),
                                     json_complex(afr.g21), json_complex(afr.g22)});
  rep["det"] = json_complex(afr.det);
  rep["w_block_norm"] = afr.w_block_norm;
  rep["cp3_branch"] = afr.cp3_branch;
  if (afr.cp3_branch) rep["line_det"] = json_complex(afr.line_det);

  bool pass = true;
  double magnitude = afr.cp3_branch ? std::abs(afr.line_det) : std::abs(afr.det);
  rep["magnitude"] = magnitude;

  if (p.params && p.params->mode == hp::Mode::Isotropy2) {
    hp::ComplexScalar closed = hp::det_afr_closed(*p.params);
    rep["closed_form"] = json_complex(closed);
    double rel = std::abs(afr.det - closed) / std::max(1e-300, std::abs(closed));
    rep["series_vs_closed_rel"] = rel;
    rep["sextic_magnitude"] = hp::sextic_magnitude(p.params->iso_theta);
    pass = pass && rel <= tol;
  }
  pass = pass && magnitude > 1e-12;
  doc["report"] = rep;
  doc["pass"] = pass;
  emit(doc, output);
  return pass ? 0 : 2;
}

int cmd_torus(const std::string& params_file, const std::string& output) {
  ParsedParams p = load_params(params_file);
  bool w_zero = p.w == hp::ComplexScalar(0.0, 0.0);

  ordered_json doc = certificate("torus", p);
  ordered_json rep;

  if (w_zero && !(p.exact_cos_theta || p.exact_cos_pair) && !p.is_reference) {
    // Zero twist descends regardless of angle arithmetic.
    rep["descends"] = true;
    rep["reason"] = "w_zero";
    doc["report"] = rep;
    emit(doc, output);
    return 0;
  }

  ExactAngleData ang = exact_angles_of(p);
  hp::TorusCriterion crit = hp::torus_criterion(ang.a1, ang.a2, w_zero);
  rep["descends"] = crit.descends;
  rep["reason"] = crit.reason;
  rep["cos_theta1"] = hp::to_string(ang.a1.cos_value());
  rep["cos_theta2"] = hp::to_string(ang.a2.cos_value());
  rep["sine_ratio"] = crit.ratio ? ordered_json(hp::to_string(*crit.ratio))
                                 : ordered_json(nullptr);

  hp::MatrixFormResult mf = hp::criterion_matrix_form(ang.a1, ang.a2, ang.twist_k);
  ordered_json mfj;
  mfj["descends"] = mf.descends;
  mfj["ratio_rational"] = mf.ratio_rational;
  if (mf.entries_rational)
    mfj["entries"] = ordered_json::array(
        {hp::to_string(mf.entries[0]), hp::to_string(mf.entries[1])});
  rep["matrix_form"] = mfj;
  // With w = 0 the criterion is unconditional; the matrix form reports the
  // w ≠ 0 decision for the same angles.
  rep["routes_agree"] = w_zero ? true : (mf.descends == crit.descends);

  doc["report"] = rep;
  emit(doc, output);
  if (!(w_zero || mf.descends == crit.descends)) {
    std::cerr << "internal: torus criterion routes disagree\n";
    return 1;
  }
  return 0;
}

int cmd_lattice(const std::string& params_file, const std::string& output) {
  ParsedParams p = load_params(params_file);
  bool w_zero = p.w == hp::ComplexScalar(0.0, 0.0);
  ExactAngleData ang = exact_angles_of(p);

  hp::LatticeBasis basis;
  try {
    basis = hp::lattice_basis(ang.a1, ang.a2, w_zero, ang.twist_k);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  ordered_json doc = certificate("lattice", p);
  ordered_json rep;
  rep["w_zero"] = w_zero;
  rep["S1"] = hp::to_string(basis.S1);
  rep["S2"] = hp::to_string(basis.S2);
  rep["index_in_base_lattice"] = basis.index.get_str();
  rep["plain_rational"] = basis.plain_rational;
  rep["verified"] = basis.verified;
  ordered_json vecs = ordered_json::array();
  for (const auto& v : basis.vecs) {
    ordered_json vj;
    vj["x"] = quad_json(v.x);
    vj["y"] = quad_json(v.y);
    vj["approx"] = ordered_json::array({M_PI * quad_value(v.x, basis.S1, basis.S2),
                                        M_PI * quad_value(v.y, basis.S1, basis.S2)});
    vecs.push_back(vj);
  }
  rep["basis"] = vecs;
  doc["report"] = rep;
  emit(doc, output);
  return 0;
}

int cmd_sample(const std::string& family_s, const std::string& mode_s, int count,
               std::uint64_t seed, const std::string& output) {
  hp::Family fam = parse_family(family_s, "--family");
  if (mode_s != "general" && mode_s != "isotropy2") {
    std::cerr << "--mode must be general or isotropy2\n";
    return 1;
  }
  bool iso = mode_s == "isotropy2";

  hp::Rng rng(seed);
  ordered_json pts = ordered_json::array();
  for (int i = 0; i < count; ++i) {
    hp::FamilyParams fp =
        iso ? hp::sample_isotropy2_params(fam, rng) : hp::sample_general_params(fam, rng);
    ordered_json pj;
    if (iso) {
      pj["theta"] = fp.iso_theta;
      pj["r"] = fp.iso_r;
    } else {
      pj["theta1"] = fp.scal.theta1;
      pj["theta2"] = fp.scal.theta2;
    }
    pj["weights"] = ordered_json::array();
    for (double r : fp.scal.r) pj["weights"].push_back(r);
    pj["w"] = ordered_json::array({fp.w.real(), fp.w.imag()});
    pj["valid"] = hp::validate_params(fp).empty();
    pts.push_back(pj);
  }

  ordered_json doc{{"tool", {{"name", "hpflat"}, {"version", "1.0.0"}}},
                   {"command", "sample"},
                   {"input",
                    {{"family", family_s}, {"mode", mode_s}, {"count", count}, {"seed", seed}}},
                   {"report", {{"points", pts}}}};
  emit(doc, output);
  return 0;
}

int cmd_plot_region(int resolution, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string csv = out_dir + "/region.csv";
  std::string svg = out_dir + "/region.svg";
  hp::emit_region_plot(csv, svg, resolution);
  ordered_json doc{{"tool", {{"name", "hpflat"}, {"version", "1.0.0"}}},
                   {"command", "plot-region"},
                   {"report", {{"csv", csv}, {"svg", svg}, {"resolution", resolution}}}};
  emit(doc, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totally real flat minimal immersions of the plane into quaternionic "
               "projective 3-space: construction, certification, torus descent"};
  app.require_subcommand(1);

  std::string params_file, output, z_text = "0.31,0.47", checks =
      "horizontal,totally_real,flat_isometric,harmonic,isotropy,det_fr";
  double tol = 1e-9;
  int samples = 100, expect = -1, count = 100, resolution = 256;
  std::uint64_t seed = 20240817;
  std::string family_s = "I", mode_s = "isotropy2", out_dir = ".";

  auto* construct = app.add_subcommand("construct", "build a lift and print its data");
  construct->add_option("--params", params_file, "parameter JSON file")->required();
  construct->add_option("--z", z_text, "evaluation point \"re,im\"");
  construct->add_option("--output", output, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "certify defining properties");
  verify->add_option("--params", params_file)->required();
  verify->add_option("--tol", tol, "residual tolerance");
  verify->add_option("--samples", samples, "number of sample points");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--checks", checks, "comma-separated check list");
  verify->add_option("--output", output);

  auto* isotropy = app.add_subcommand("isotropy", "compute the isotropy order");
  isotropy->add_option("--params", params_file)->required();
  double iso_tol = 1e-8;
  int iso_samples = 16;
  isotropy->add_option("--tol", iso_tol, "Gram tolerance");
  isotropy->add_option("--samples", iso_samples);
  isotropy->add_option("--seed", seed);
  isotropy->add_option("--expect", expect, "fail (exit 2) unless the order equals this");
  isotropy->add_option("--output", output);

  auto* detfr = app.add_subcommand("det-fr", "return-map determinant");
  detfr->add_option("--params", params_file)->required();
  detfr->add_option("--z", z_text);
  detfr->add_option("--tol", tol, "series-vs-closed relative tolerance");
  detfr->add_option("--output", output);

  auto* torus = app.add_subcommand("torus", "exact torus descent decision");
  torus->add_option("--params", params_file)->required();
  torus->add_option("--output", output);

  auto* lattice = app.add_subcommand("lattice", "exact period lattice basis");
  lattice->add_option("--params", params_file)->required();
  lattice->add_option("--output", output);

  auto* sample = app.add_subcommand("sample", "draw valid parameter points");
  sample->add_option("--family", family_s, "I, II or III");
  sample->add_option("--mode", mode_s, "general or isotropy2");
  sample->add_option("--count", count);
  sample->add_option("--seed", seed);
  sample->add_option("--output", output);

  auto* plot = app.add_subcommand("plot-region", "emit region CSV + SVG");
  plot->add_option("--resolution", resolution);
  plot->add_option("--output-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (construct->parsed()) return cmd_construct(params_file, z_text, output);
    if (verify->parsed()) return cmd_verify(params_file, tol, samples, seed, checks, output);
    if (isotropy->parsed())
      return cmd_isotropy(params_file, iso_tol, iso_samples, seed, expect, output);
    if (detfr->parsed()) return cmd_det_fr(params_file, z_text, tol, output);
    if (torus->parsed()) return cmd_torus(params_file, output);
    if (lattice->parsed()) return cmd_lattice(params_file, output);
    if (sample->parsed()) return cmd_sample(family_s, mode_s, count, seed, output);
    if (plot->parsed()) return cmd_plot_region(resolution, out_dir);
  } catch (const hp::RegionError& e) {
    die_region(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
