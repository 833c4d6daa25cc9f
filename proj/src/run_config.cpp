#include "galton/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace galton {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw std::invalid_argument("config field '" + path + "': " + msg);
}

void require_keys(const json& j, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "must be an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

double get_num(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "must be a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "must be an integer");
  return j.get<int>();
}

std::vector<double> get_num_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "must be an array of numbers");
  std::vector<double> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(get_num(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

SpinSystemConfig parse_system(const json& j) {
  require_keys(j, "system",
               {"n_nuclei", "a_par", "a_perp", "b0", "gamma_n", "gamma_e_b0",
                "delta", "rabi", "model"});
  SpinSystemConfig cfg;
  if (!j.contains("n_nuclei")) fail("system.n_nuclei", "required");
  cfg.n_nuclei = get_int(j["n_nuclei"], "system.n_nuclei");
  if (j.contains("a_par")) cfg.a_par = get_num_list(j["a_par"], "system.a_par");
  if (j.contains("a_perp")) cfg.a_perp = get_num_list(j["a_perp"], "system.a_perp");
  if (j.contains("b0")) cfg.b0 = get_num(j["b0"], "system.b0");
  if (j.contains("gamma_n")) cfg.gamma_n = get_num(j["gamma_n"], "system.gamma_n");
  if (j.contains("gamma_e_b0"))
    cfg.gamma_e_b0 = get_num(j["gamma_e_b0"], "system.gamma_e_b0");
  if (j.contains("delta")) cfg.delta = get_num(j["delta"], "system.delta");
  if (j.contains("rabi")) cfg.rabi = get_num(j["rabi"], "system.rabi");
  if (j.contains("model")) {
    require_keys(j["model"], "system.model", {"alpha", "p_exp", "phi"});
    PowerLawModel m;
    if (j["model"].contains("alpha"))
      m.alpha = get_num(j["model"]["alpha"], "system.model.alpha");
    if (j["model"].contains("p_exp"))
      m.p_exp = get_num(j["model"]["p_exp"], "system.model.p_exp");
    if (j["model"].contains("phi"))
      m.phi = get_num(j["model"]["phi"], "system.model.phi");
    cfg.model = m;
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail("system", e.what());
  }
  return cfg;
}

SweepConfig parse_sweep(const json& j) {
  require_keys(j, "sweep",
               {"direction", "f0", "bandwidth", "rate", "n_sweeps", "w_l",
                "omega_r", "t_total", "conj_diag_adiabatic", "eta_uniform"});
  SweepConfig s;
  if (j.contains("direction")) {
    const std::string d = j["direction"].is_string()
                              ? j["direction"].get<std::string>()
                              : "";
    if (d == "low_to_high")
      s.direction = SweepDirection::low_to_high;
    else if (d == "high_to_low")
      s.direction = SweepDirection::high_to_low;
    else
      fail("sweep.direction", "must be 'low_to_high' or 'high_to_low'");
  }
  if (j.contains("f0")) s.f0 = get_num(j["f0"], "sweep.f0");
  if (j.contains("bandwidth")) {
    s.bandwidth = get_num(j["bandwidth"], "sweep.bandwidth");
    if (*s.bandwidth <= 0.0) fail("sweep.bandwidth", "must be > 0");
  }
  if (j.contains("rate")) {
    s.rate = get_num(j["rate"], "sweep.rate");
    if (s.rate <= 0.0) fail("sweep.rate", "must be > 0");
  }
  if (j.contains("n_sweeps")) {
    s.n_sweeps = get_int(j["n_sweeps"], "sweep.n_sweeps");
    if (s.n_sweeps < 1) fail("sweep.n_sweeps", "must be >= 1");
  }
  if (j.contains("w_l")) s.w_l = get_num(j["w_l"], "sweep.w_l");
  if (j.contains("omega_r")) s.omega_r = get_num(j["omega_r"], "sweep.omega_r");
  if (j.contains("t_total")) s.t_total = get_num(j["t_total"], "sweep.t_total");
  if (j.contains("conj_diag_adiabatic")) {
    if (!j["conj_diag_adiabatic"].is_boolean())
      fail("sweep.conj_diag_adiabatic", "must be a boolean");
    s.conj_diag_adiabatic = j["conj_diag_adiabatic"].get<bool>();
  }
  if (j.contains("eta_uniform")) {
    s.eta_uniform = get_num(j["eta_uniform"], "sweep.eta_uniform");
    if (*s.eta_uniform < 0.0 || *s.eta_uniform > 1.0)
      fail("sweep.eta_uniform", "must lie in [0,1]");
  }
  return s;
}

DosSpec parse_dos(const json& j) {
  require_keys(j, "dos", {"kind", "mean", "sigma", "fwhm", "levels"});
  const std::string kind =
      j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                                                  : "gaussian";
  if (kind == "explicit") {
    if (!j.contains("levels")) fail("dos.levels", "required for explicit kind");
    return DosSpec::from_levels(get_num_list(j["levels"], "dos.levels"));
  }
  if (kind != "gaussian") fail("dos.kind", "must be 'gaussian' or 'explicit'");
  const double mean = j.contains("mean") ? get_num(j["mean"], "dos.mean") : 0.0;
  if (j.contains("sigma") && j.contains("fwhm"))
    fail("dos", "give either sigma or fwhm, not both");
  if (j.contains("sigma"))
    return DosSpec::gaussian_sigma(mean, get_num(j["sigma"], "dos.sigma"));
  if (j.contains("fwhm"))
    return DosSpec::gaussian_fwhm(mean, get_num(j["fwhm"], "dos.fwhm"));
  fail("dos", "gaussian kind requires sigma or fwhm");
}

ScanConfig parse_scan(const json& j) {
  require_keys(j, "scan", {"center_min", "center_max", "n_centers"});
  ScanConfig s;
  if (!j.contains("center_min") || !j.contains("center_max") ||
      !j.contains("n_centers"))
    fail("scan", "center_min, center_max and n_centers are required");
  s.center_min = get_num(j["center_min"], "scan.center_min");
  s.center_max = get_num(j["center_max"], "scan.center_max");
  s.n_centers = get_int(j["n_centers"], "scan.n_centers");
  if (s.n_centers < 2) fail("scan.n_centers", "must be >= 2");
  if (!(s.center_min < s.center_max))
    fail("scan.center_max", "must exceed center_min");
  return s;
}

RatchetParams parse_ratchet(const json& j) {
  require_keys(j, "ratchet", {"eta_small", "eta_large", "w_l", "omega_r", "t_total"});
  RatchetParams r;
  if (j.contains("eta_small")) r.eta_small = get_num(j["eta_small"], "ratchet.eta_small");
  if (j.contains("eta_large")) r.eta_large = get_num(j["eta_large"], "ratchet.eta_large");
  if (j.contains("w_l")) r.w_l = get_num(j["w_l"], "ratchet.w_l");
  if (j.contains("omega_r")) r.omega_r = get_num(j["omega_r"], "ratchet.omega_r");
  if (j.contains("t_total")) r.t_total = get_num(j["t_total"], "ratchet.t_total");
  try {
    r.validate();
  } catch (const std::invalid_argument& e) {
    fail("ratchet", e.what());
  }
  return r;
}

BinomialParams parse_binomial(const json& j) {
  require_keys(j, "binomial", {"n_nuclei", "p_down", "q_right"});
  BinomialParams b;
  if (j.contains("n_nuclei")) b.n_nuclei = get_int(j["n_nuclei"], "binomial.n_nuclei");
  if (j.contains("p_down")) b.p_down = get_num(j["p_down"], "binomial.p_down");
  if (j.contains("q_right")) b.q_right = get_num(j["q_right"], "binomial.q_right");
  if (j.contains("p_down") && !j.contains("q_right")) b.q_right = 1.0 - b.p_down;
  if (j.contains("q_right") && !j.contains("p_down")) b.p_down = 1.0 - b.q_right;
  try {
    b.validate();
  } catch (const std::invalid_argument& e) {
    fail("binomial", e.what());
  }
  return b;
}

OracleConfig parse_oracle(const json& j) {
  require_keys(j, "oracle", {"n_tables", "corrupt"});
  OracleConfig o;
  if (j.contains("n_tables")) {
    o.n_tables = get_int(j["n_tables"], "oracle.n_tables");
    if (o.n_tables < 1) fail("oracle.n_tables", "must be >= 1");
  }
  if (j.contains("corrupt")) {
    if (!j["corrupt"].is_boolean()) fail("oracle.corrupt", "must be a boolean");
    o.corrupt = j["corrupt"].get<bool>();
  }
  return o;
}

OutputConfig parse_output(const json& j) {
  require_keys(j, "output", {"path", "format"});
  OutputConfig o;
  if (j.contains("path")) {
    if (!j["path"].is_string()) fail("output.path", "must be a string");
    o.path = j["path"].get<std::string>();
  }
  if (j.contains("format")) {
    const std::string f =
        j["format"].is_string() ? j["format"].get<std::string>() : "";
    if (f == "csv")
      o.format = OutputFormat::csv;
    else if (f == "json")
      o.format = OutputFormat::json;
    else
      fail("output.format", "must be 'csv' or 'json'");
  }
  return o;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  require_keys(j, "(root)",
               {"system", "sweep", "dos", "scan", "ratchet", "binomial",
                "oracle", "output", "seed"});
  RunConfig cfg;
  if (j.contains("system")) cfg.system = parse_system(j["system"]);
  if (j.contains("sweep")) cfg.sweep = parse_sweep(j["sweep"]);
  if (j.contains("dos")) cfg.dos = parse_dos(j["dos"]);
  if (j.contains("scan")) cfg.scan = parse_scan(j["scan"]);
  if (j.contains("ratchet")) cfg.ratchet = parse_ratchet(j["ratchet"]);
  if (j.contains("binomial")) cfg.binomial = parse_binomial(j["binomial"]);
  if (j.contains("oracle")) cfg.oracle = parse_oracle(j["oracle"]);
  if (j.contains("output")) cfg.output = parse_output(j["output"]);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail("seed", "must be an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  return cfg;
}

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell_to_string(const std::variant<std::string, double, std::int64_t>& c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  return format_number(std::get<double>(c));
}

}  // namespace

std::string format_table(const Table& table, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    for (size_t i = 0; i < table.columns.size(); ++i)
      out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
      for (size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << cell_to_string(row[i]);
      out << "\n";
    }
    return out.str();
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec;
    for (size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (std::holds_alternative<std::string>(c))
        rec[table.columns[i]] = std::get<std::string>(c);
      else if (std::holds_alternative<std::int64_t>(c))
        rec[table.columns[i]] = std::get<std::int64_t>(c);
      else
        rec[table.columns[i]] = std::get<double>(c);
    }
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

void write_output(const Table& table, const OutputConfig& out) {
  const std::string text = format_table(table, out.format);
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out.path);
  f << text;
}

}  // namespace galton
