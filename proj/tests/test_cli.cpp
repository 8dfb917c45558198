// End-to-end exercise of the command line tool, spawned as a subprocess.
// argv[1] is the path to the built binary.  Covers the exit-code contract
// (0 computed, 1 schema/usage, 2 failed check), certificate reproducibility,
// the float-refusal rule for exact decisions, and the JSON report shapes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "test_support.hpp"

using nlohmann::ordered_json;

namespace {

std::string g_binary;
int g_case = 0;

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream out(name);
  out << content;
  return name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  ++g_case;
  std::string out_file = "cli_out_" + std::to_string(g_case) + ".txt";
  std::string err_file = "cli_err_" + std::to_string(g_case) + ".txt";
  std::string cmd = g_binary + " " + args + " >" + out_file + " 2>" + err_file;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

const char* kIso2Params = R"({
  "family": "II",
  "mode": "isotropy2",
  "theta": {"radians": 1.35},
  "r": 0.08,
  "w": [0.4, -0.3]
})";

const char* kIso2ExactParams = R"({
  "family": "II",
  "mode": "isotropy2",
  "theta": {"cos": "2/5"},
  "r": "1/12",
  "w": [0.4, -0.3]
})";

const char* kGeneralExactParams = R"({
  "family": "I",
  "mode": "general",
  "theta1": {"cos": "3/5"},
  "theta2": {"cos": "-3/5"},
  "weights": {"r2": 0.1, "r5": 0.1},
  "w": [0.25, 0]
})";

void verify_passes_and_reproduces() {
  write_file("p_iso2.json", kIso2Params);
  RunResult a = run("verify --params p_iso2.json --seed 11 --samples 40 --output cert_a.json");
  REQUIRE(a.exit_code == 0);
  RunResult b = run("verify --params p_iso2.json --seed 11 --samples 40 --output cert_b.json");
  REQUIRE(b.exit_code == 0);
  std::string cert_a = slurp("cert_a.json"), cert_b = slurp("cert_b.json");
  REQUIRE(!cert_a.empty());
  REQUIRE(cert_a == cert_b);  // byte-reproducible certificates

  ordered_json doc = ordered_json::parse(cert_a);
  REQUIRE(doc.at("pass").get<bool>());
  REQUIRE(doc.at("tool").at("name").get<std::string>() == "hpflat");
  REQUIRE(doc.at("input").at("family").get<std::string>() == "II");
  REQUIRE(doc.at("report").at("checks").size() == 8);
}

void schema_errors_exit_1() {
  // missing required field
  write_file("p_bad1.json", R"({"family": "II", "mode": "isotropy2", "theta": {"radians": 1.35}})");
  RunResult r1 = run("verify --params p_bad1.json");
  REQUIRE(r1.exit_code == 1);
  REQUIRE(r1.err.find("$.r") != std::string::npos);

  // unknown field with its path
  write_file("p_bad2.json", R"({"family": "II", "mode": "isotropy2", "theta": {"radians": 1.35}, "r": 0.1, "junk": 1})");
  RunResult r2 = run("verify --params p_bad2.json");
  REQUIRE(r2.exit_code == 1);
  REQUIRE(r2.err.find("$.junk") != std::string::npos);

  // malformed rational
  write_file("p_bad3.json", R"({"family": "II", "mode": "isotropy2", "theta": {"cos": "2//5"}, "r": 0.1})");
  RunResult r3 = run("verify --params p_bad3.json");
  REQUIRE(r3.exit_code == 1);

  // region violation also reports as non-zero with the named inequality
  write_file("p_bad4.json", R"({"family": "II", "mode": "isotropy2", "theta": {"radians": 0.9}, "r": 0.1})");
  RunResult r4 = run("verify --params p_bad4.json");
  REQUIRE(r4.exit_code == 1);
  REQUIRE(r4.err.find("Gamma3(C)") != std::string::npos);

  // bad usage: unknown subcommand
  RunResult r5 = run("no-such-command");
  REQUIRE(r5.exit_code == 1);

  // unreadable params path
  RunResult r6 = run("verify --params does_not_exist.json");
  REQUIRE(r6.exit_code == 1);
}

void failed_check_exits_2() {
  write_file("p_iso2.json", kIso2Params);
  // the isotropy order of this lift is 2; demanding 3 must fail with code 2
  RunResult r = run("isotropy --params p_iso2.json --expect 3 --output iso_fail.json");
  REQUIRE(r.exit_code == 2);
  ordered_json doc = ordered_json::parse(slurp("iso_fail.json"));
  REQUIRE(doc.at("report").at("order").get<int>() == 2);
  REQUIRE(!doc.at("pass").get<bool>());

  RunResult ok = run("isotropy --params p_iso2.json --expect 2");
  REQUIRE(ok.exit_code == 0);
}

void torus_exactness_contract() {
  // float angles with a nonzero twist are refused for the exact decision
  write_file("p_iso2.json", kIso2Params);
  RunResult refuse = run("torus --params p_iso2.json");
  REQUIRE(refuse.exit_code == 1);
  REQUIRE(refuse.err.find("cos") != std::string::npos);

  // exact cosine: decision computed, descends (isotropy-2 ratio is rational)
  write_file("p_iso2x.json", kIso2ExactParams);
  RunResult ok = run("torus --params p_iso2x.json --output torus_ok.json");
  REQUIRE(ok.exit_code == 0);
  ordered_json doc = ordered_json::parse(slurp("torus_ok.json"));
  REQUIRE(doc.at("report").at("descends").get<bool>());
  REQUIRE(doc.at("report").at("reason").get<std::string>() == "sine_ratio_rational_square");
  REQUIRE(doc.at("report").at("matrix_form").at("descends").get<bool>());
  REQUIRE(doc.at("report").at("routes_agree").get<bool>());

  // float angles but w = 0: decidable without exact data
  write_file("p_w0.json", R"({"family": "II", "mode": "isotropy2", "theta": {"radians": 1.35}, "r": 0.08, "w": [0, 0]})");
  RunResult w0 = run("torus --params p_w0.json");
  REQUIRE(w0.exit_code == 0);
  REQUIRE(w0.out.find("\"w_zero\"") != std::string::npos);
}

void lattice_worked_example() {
  write_file("p_gen.json", kGeneralExactParams);
  RunResult r = run("lattice --params p_gen.json --output lat.json");
  REQUIRE(r.exit_code == 0);
  ordered_json doc = ordered_json::parse(slurp("lat.json"));
  const auto& rep = doc.at("report");
  REQUIRE(rep.at("index_in_base_lattice").get<std::string>() == "3");
  REQUIRE(rep.at("plain_rational").get<bool>());
  REQUIRE(rep.at("verified").get<bool>());
  REQUIRE(rep.at("basis").size() == 2);
  // first basis vector of the twist sublattice: 3*(5/3, 5/6) = (5, 5/2)
  REQUIRE(rep.at("basis")[0].at("x").at("pi").get<std::string>() == "5");
  REQUIRE(rep.at("basis")[0].at("y").at("pi").get<std::string>() == "5/2");

  // without the twist the base lattice has index 1 and vector (5/3, 5/6)
  write_file("p_gen0.json", R"({
    "family": "I", "mode": "general",
    "theta1": {"cos": "3/5"}, "theta2": {"cos": "-3/5"},
    "weights": {"r2": 0.1, "r5": 0.1}, "w": [0, 0]
  })");
  RunResult r0 = run("lattice --params p_gen0.json --output lat0.json");
  REQUIRE(r0.exit_code == 0);
  ordered_json doc0 = ordered_json::parse(slurp("lat0.json"));
  REQUIRE(doc0.at("report").at("index_in_base_lattice").get<std::string>() == "1");
  REQUIRE(doc0.at("report").at("basis")[0].at("x").at("pi").get<std::string>() == "5/3");
}

void construct_and_reference() {
  write_file("p_iso2.json", kIso2Params);
  RunResult r = run("construct --params p_iso2.json --z 0.2,0.1");
  REQUIRE(r.exit_code == 0);
  ordered_json doc = ordered_json::parse(r.out);
  REQUIRE(doc.at("report").at("frequencies").size() == 6);
  REQUIRE(doc.at("report").at("value").size() == 8);
  REQUIRE(doc.at("report").at("quaternionic").size() == 4);

  write_file("p_ref.json", R"({"reference": "clifford"})");
  RunResult rr = run("verify --params p_ref.json --checks horizontal,totally_real,harmonic");
  REQUIRE(rr.exit_code == 0);

  // the uncentred reference fails flat_isometric with exit 2
  write_file("p_ref8.json", R"({"reference": "eighth"})");
  RunResult r8 = run("verify --params p_ref8.json --checks flat_isometric");
  REQUIRE(r8.exit_code == 2);
}

void sample_and_plot() {
  RunResult s = run("sample --family III --mode isotropy2 --count 5 --seed 3 --output samp.json");
  REQUIRE(s.exit_code == 0);
  ordered_json doc = ordered_json::parse(slurp("samp.json"));
  REQUIRE(doc.at("report").at("points").size() == 5);
  for (const auto& p : doc.at("report").at("points")) REQUIRE(p.at("valid").get<bool>());

  RunResult s2 = run("sample --family III --mode isotropy2 --count 5 --seed 3");
  ordered_json doc2 = ordered_json::parse(s2.out);
  REQUIRE(doc.at("report") == doc2.at("report"));  // seeded determinism

  RunResult pl = run("plot-region --resolution 32 --output-dir cli_plots");
  REQUIRE(pl.exit_code == 0);
  REQUIRE(!slurp("cli_plots/region.csv").empty());
  REQUIRE(!slurp("cli_plots/region.svg").empty());
}

void det_fr_certificate() {
  write_file("p_iso2.json", kIso2Params);
  RunResult r = run("det-fr --params p_iso2.json --z 0.5,0.5 --output det.json");
  REQUIRE(r.exit_code == 0);
  ordered_json doc = ordered_json::parse(slurp("det.json"));
  REQUIRE(doc.at("pass").get<bool>());
  REQUIRE(doc.at("report").at("series_vs_closed_rel").get<double>() <= 1e-9);
  REQUIRE(doc.at("report").at("magnitude").get<double>() > 1e-12);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-binary>\n");
    return 1;
  }
  g_binary = argv[1];
  verify_passes_and_reproduces();
  schema_errors_exit_1();
  failed_check_exits_2();
  torus_exactness_contract();
  lattice_worked_example();
  construct_and_reference();
  sample_and_plot();
  det_fr_certificate();
  return testsupport::finish("test_cli");
}
