#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#ifndef GALTON_CLI_PATH
#error "GALTON_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "galton_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = work_dir() / name;
  std::ofstream(p) << text;
  return p;
}

int run_cli(const std::string& args, const std::string& tag) {
  const fs::path err = work_dir() / (tag + ".stderr");
  const fs::path log = work_dir() / (tag + ".stdout");
  const std::string cmd = std::string(GALTON_CLI_PATH) + " " + args + " >" +
                          log.string() + " 2>" + err.string();
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ostringstream out;
  out << std::ifstream(p).rdbuf();
  return out.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

const char* kModelSystem1 = R"({"n_nuclei": 1, "delta": 0.0, "gamma_e_b0": 0.0,
  "rabi": 0.1, "model": {"alpha": 5.0, "p_exp": 1.1}})";

}  // namespace

TEST_CASE("board command emits the N=1 grid") {
  const fs::path cfg = write_file("board1.json",
      std::string("{\"system\": ") + kModelSystem1 +
      ", \"sweep\": {\"eta_uniform\": 0.5}}");
  const fs::path out = work_dir() / "board1.csv";
  REQUIRE(run_cli("board --config " + cfg.string() + " --out " + out.string(),
                  "board1") == 0);
  const auto rows = lines(slurp(out));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "k,l,frequency,energy,gap,eta");
  CHECK(rows[1].rfind("1,1,-6,1,", 0) == 0);
  CHECK(rows[2].rfind("1,2,-4,-1,", 0) == 0);
  CHECK(rows[3].rfind("2,1,4,1,", 0) == 0);
  CHECK(rows[4].rfind("2,2,6,-1,", 0) == 0);
}

TEST_CASE("board command emits a 64-point grid for N=3") {
  const fs::path cfg = write_file("board3.json",
      R"({"system": {"n_nuclei": 3, "delta": 0.0, "gamma_e_b0": 0.0,
          "rabi": 0.1, "model": {"alpha": 5.0, "p_exp": 1.1}},
          "sweep": {"rate": 1.0}})");
  const fs::path out = work_dir() / "board3.csv";
  REQUIRE(run_cli("board --config " + cfg.string() + " --out " + out.string(),
                  "board3") == 0);
  CHECK(lines(slurp(out)).size() == 65);
}

TEST_CASE("sweep command reports populations and polarization") {
  const fs::path cfg = write_file("sweep1.json",
      std::string("{\"system\": ") + kModelSystem1 +
      ", \"sweep\": {\"eta_uniform\": 0.5, \"conj_diag_adiabatic\": true}}");
  const fs::path out = work_dir() / "sweep1.csv";
  REQUIRE(run_cli("sweep --config " + cfg.string() + " --out " + out.string(),
                  "sweep1") == 0);
  const auto rows = lines(slurp(out));
  REQUIRE(rows.size() == 6);  // header + 2 m0 + 2 m1 + polarization
  CHECK(rows[0] == "n,manifold,population");
  // eta_small=1/2 and adiabatic conjugate diagonal: mixed-state polarization
  // is half the unit-population closed form, i.e. 0.5
  CHECK(rows[5] == "0,polarization,0.5");
}

TEST_CASE("ratchet command reports closed forms") {
  const fs::path cfg = write_file("ratchet.json",
      R"({"ratchet": {"eta_small": 0.5, "eta_large": 0.0, "w_l": 1.0,
          "omega_r": 1.0, "t_total": 1.0},
          "binomial": {"n_nuclei": 4, "p_down": 0.5}})");
  const fs::path out = work_dir() / "ratchet.csv";
  REQUIRE(run_cli("ratchet --config " + cfg.string() + " --out " + out.string(),
                  "ratchet") == 0);
  const auto rows = lines(slurp(out));
  REQUIRE(rows.size() == 1 + 3 + 16 + 16 + 2);
  CHECK(rows[1] == "single_sweep_polarization,0,1");
  CHECK(rows[2] == "single_sweep_polarization_negative_coupling,0,0");
}

TEST_CASE("map command emits forward and reverse scans deterministically") {
  const fs::path cfg = write_file("map.json",
      R"({"system": {"n_nuclei": 5, "delta": 0.0, "gamma_e_b0": 0.0,
          "rabi": 0.1, "model": {}},
          "dos": {"mean": 50.0, "fwhm": 6.0},
          "scan": {"center_min": 40.0, "center_max": 60.0, "n_centers": 11},
          "sweep": {"bandwidth": 3.0, "eta_uniform": 0.5}})");
  const fs::path out1 = work_dir() / "map1.csv";
  const fs::path out2 = work_dir() / "map2.csv";
  REQUIRE(run_cli("map --config " + cfg.string() + " --out " + out1.string() +
                      " --threads 1",
                  "map1") == 0);
  REQUIRE(run_cli("map --config " + cfg.string() + " --out " + out2.string() +
                      " --threads 4",
                  "map2") == 0);
  const std::string a = slurp(out1);
  CHECK(a == slurp(out2));
  const auto rows = lines(a);
  REQUIRE(rows.size() == 23);  // header + 11 centers x 2 directions
  CHECK(rows[0] == "f0,B,direction,polarization");
  CHECK(rows[1].find("forward") != std::string::npos);
  CHECK(rows[2].find("reverse") != std::string::npos);
}

TEST_CASE("oracle-check exit codes") {
  const fs::path ok = write_file("oracle_ok.json",
      R"({"system": {"n_nuclei": 2, "delta": 0.0, "gamma_e_b0": 0.0,
          "rabi": 0.1, "model": {}},
          "oracle": {"n_tables": 5}, "seed": 11})");
  CHECK(run_cli("oracle-check --config " + ok.string(), "oracle_ok") == 0);

  const fs::path bad = write_file("oracle_bad.json",
      R"({"system": {"n_nuclei": 2, "delta": 0.0, "gamma_e_b0": 0.0,
          "rabi": 0.1, "model": {}},
          "oracle": {"n_tables": 2, "corrupt": true}, "seed": 11})");
  CHECK(run_cli("oracle-check --config " + bad.string(), "oracle_bad") == 2);

  const fs::path big = write_file("oracle_big.json",
      R"({"system": {"n_nuclei": 5, "delta": 0.0, "gamma_e_b0": 0.0,
          "rabi": 0.1, "model": {}},
          "oracle": {"n_tables": 1}})");
  CHECK(run_cli("oracle-check --config " + big.string(), "oracle_big") == 1);
}

TEST_CASE("configuration validation failures exit with code 1") {
  const fs::path mismatch = write_file("bad_system.json",
      R"({"system": {"n_nuclei": 2, "a_par": [1.0], "a_perp": [0.1, 0.2],
          "b0": 100.0, "rabi": 0.1},
          "sweep": {"eta_uniform": 0.5}})");
  CHECK(run_cli("board --config " + mismatch.string(), "bad_system") == 1);
  const std::string err = slurp(work_dir() / "bad_system.stderr");
  CHECK(err.find("system") != std::string::npos);

  const fs::path unknown = write_file("unknown_key.json",
      std::string("{\"system\": ") + kModelSystem1 +
      ", \"sweep\": {\"eta_uniform\": 0.5, \"bogus\": 1}}");
  CHECK(run_cli("board --config " + unknown.string(), "unknown_key") == 1);
  const std::string err2 = slurp(work_dir() / "unknown_key.stderr");
  CHECK(err2.find("sweep.bogus") != std::string::npos);

  CHECK(run_cli("board --config " + (work_dir() / "missing.json").string(),
                "missing_cfg") == 1);
}

TEST_CASE("json output format") {
  const fs::path cfg = write_file("board_json.json",
      std::string("{\"system\": ") + kModelSystem1 +
      ", \"sweep\": {\"eta_uniform\": 0.5}}");
  const fs::path out = work_dir() / "board.json";
  REQUIRE(run_cli("board --config " + cfg.string() + " --out " + out.string() +
                      " --format json",
                  "board_json") == 0);
  const std::string text = slurp(out);
  CHECK(text.front() == '[');
  CHECK(text.find("\"frequency\"") != std::string::npos);
}
