#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galton/analytic.hpp"
#include "galton/spectral_map.hpp"

namespace galton {

// Sweep settings as given in a run configuration; SweepSpec plus the
// accumulation extensions and the tunneling-table policy.
struct SweepConfig {
  SweepDirection direction = SweepDirection::low_to_high;
  std::optional<double> f0;
  std::optional<double> bandwidth;
  double rate = 1.0;
  int n_sweeps = 1;
  double w_l = 1.0;
  double omega_r = 1.0;
  double t_total = 0.0;
  bool conj_diag_adiabatic = false;
  std::optional<double> eta_uniform;  // replaces the gap-derived table
};

struct ScanConfig {
  double center_min = 0.0;
  double center_max = 0.0;
  int n_centers = 0;
};

struct OracleConfig {
  int n_tables = 20;
  bool corrupt = false;  // test hook: injects a deviation
};

enum class OutputFormat { csv, json };

struct OutputConfig {
  std::string path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
};

struct RunConfig {
  std::optional<SpinSystemConfig> system;
  std::optional<SweepConfig> sweep;
  std::optional<DosSpec> dos;
  std::optional<ScanConfig> scan;
  std::optional<RatchetParams> ratchet;
  std::optional<BinomialParams> binomial;
  OracleConfig oracle;
  OutputConfig output;
  std::uint64_t seed = 0;
};

// Parses and validates a JSON run configuration; unknown keys are rejected
// with the offending field path.  Throws std::invalid_argument.
RunConfig load_run_config(const std::string& path);

// Tabular output: fixed column set, cells either text or full-precision
// numbers (17 significant digits in CSV; JSON mirrors the records).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::variant<std::string, double, std::int64_t>>> rows;
};

std::string format_table(const Table& table, OutputFormat format);
void write_output(const Table& table, const OutputConfig& out);

}  // namespace galton
