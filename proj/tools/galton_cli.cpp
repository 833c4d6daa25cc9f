// galton: command-line front end for the Landau-Zener Galton-board
// hyperpolarization simulator.
//
// Subcommands: board | sweep | map | ratchet | oracle-check.
// Exit codes: 0 success, 1 validation error, 2 numerical-check failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "galton/analytic.hpp"
#include "galton/checkerboard.hpp"
#include "galton/oracle.hpp"
#include "galton/run_config.hpp"
#include "galton/spectral_map.hpp"
#include "galton/traversal.hpp"

namespace {

using namespace galton;

struct NumericalCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliOverrides {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

RunConfig load_with_overrides(const CliOverrides& o) {
  RunConfig cfg = load_run_config(o.config_path);
  if (!o.out_path.empty()) cfg.output.path = o.out_path;
  if (!o.format.empty()) {
    if (o.format == "csv")
      cfg.output.format = OutputFormat::csv;
    else if (o.format == "json")
      cfg.output.format = OutputFormat::json;
    else
      throw std::invalid_argument("--format must be csv or json");
  }
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

const SpinSystemConfig& require_system(const RunConfig& cfg) {
  if (!cfg.system)
    throw std::invalid_argument("config group 'system' is required");
  return *cfg.system;
}

TunnelingTable make_table(const Checkerboard& board, const SweepConfig& sweep) {
  if (sweep.eta_uniform)
    return uniform_table(board, *sweep.eta_uniform, sweep.conj_diag_adiabatic);
  return tunneling_table(board, sweep.rate, sweep.conj_diag_adiabatic);
}

SweepSpec make_sweep_spec(const SweepConfig& sweep) {
  SweepSpec s;
  s.direction = sweep.direction;
  s.rate = sweep.rate;
  if (sweep.f0 && sweep.bandwidth)
    s.window = SweepWindow{*sweep.f0, *sweep.bandwidth};
  else if (sweep.f0 || sweep.bandwidth)
    throw std::invalid_argument(
        "sweep window requires both f0 and bandwidth (or neither)");
  return s;
}

void cmd_board(const RunConfig& cfg) {
  const Checkerboard board = build_checkerboard(require_system(cfg));
  if (!cfg.sweep)
    throw std::invalid_argument("config group 'sweep' is required for board");
  const TunnelingTable table = make_table(board, *cfg.sweep);

  Table t;
  t.columns = {"k", "l", "frequency", "energy", "gap", "eta"};
  for (int k = 0; k < board.size; ++k)
    for (int l = 0; l < board.size; ++l)
      t.rows.push_back({std::int64_t{k + 1}, std::int64_t{l + 1},
                        board.frequency(k, l), board.energy(l), board.gap(k, l),
                        table.at(k, l)});
  write_output(t, cfg.output);

  const SymmetryReport rep = verify_symmetries(board, 1e-9);
  std::cerr << "symmetry check: max coordinate violation "
            << rep.max_coord_violation << ", max gap violation "
            << rep.max_gap_violation << "\n";
  if (!rep.ok)
    throw NumericalCheckError("checkerboard mirror-symmetry check failed");
}

void cmd_sweep(const RunConfig& cfg) {
  const Checkerboard board = build_checkerboard(require_system(cfg));
  if (!cfg.sweep)
    throw std::invalid_argument("config group 'sweep' is required for sweep");
  const TunnelingTable table = make_table(board, *cfg.sweep);
  const SweepSpec spec = make_sweep_spec(*cfg.sweep);
  const StatePopulations initial = StatePopulations::mixed(board.size);

  StatePopulations exit_pops;
  if (cfg.sweep->n_sweeps > 1)
    exit_pops = accumulate_sweeps(board, table, spec, initial, cfg.sweep->n_sweeps,
                                  cfg.sweep->w_l, cfg.sweep->omega_r);
  else
    exit_pops = propagate(board, table, spec, initial);

  Table t;
  t.columns = {"n", "manifold", "population"};
  for (int n = 0; n < board.size; ++n)
    t.rows.push_back({std::int64_t{n + 1}, std::string("m0"), exit_pops.m0[n]});
  for (int n = 0; n < board.size; ++n)
    t.rows.push_back({std::int64_t{n + 1}, std::string("m1"), exit_pops.m1[n]});
  const double pol = polarization(laser_reset(exit_pops));
  t.rows.push_back({std::int64_t{0}, std::string("polarization"), pol});
  write_output(t, cfg.output);
}

void cmd_map(const RunConfig& cfg, int threads) {
  const SpinSystemConfig& sys = require_system(cfg);
  if (!cfg.dos) throw std::invalid_argument("config group 'dos' is required for map");
  if (!cfg.scan) throw std::invalid_argument("config group 'scan' is required for map");
  if (!cfg.sweep || !cfg.sweep->bandwidth)
    throw std::invalid_argument("sweep.bandwidth is required for map");

  DosBoardOptions opts;
  if (cfg.seed != 0) opts.sample_seed = cfg.seed;  // 0: quantile placement
  const Checkerboard board = place_levels_by_dos(sys.n_nuclei, *cfg.dos, opts);
  // Windowed scans assume adiabatic electron-only crossings and a uniform
  // bend probability at all other nodes.
  const TunnelingTable table =
      uniform_table(board, cfg.sweep->eta_uniform.value_or(0.5), true);

  std::vector<double> centers(cfg.scan->n_centers);
  for (int i = 0; i < cfg.scan->n_centers; ++i)
    centers[i] = cfg.scan->center_min +
                 (cfg.scan->center_max - cfg.scan->center_min) * i /
                     (cfg.scan->n_centers - 1);

  ScanDirections dirs;
  dirs.forward = dirs.reverse = true;
  const SpectralProfile prof = scan_profile(board, table, *cfg.sweep->bandwidth,
                                            centers, dirs, threads);

  Table t;
  t.columns = {"f0", "B", "direction", "polarization"};
  for (size_t i = 0; i < prof.centers.size(); ++i) {
    t.rows.push_back({prof.centers[i], prof.bandwidth, std::string("forward"),
                      prof.polarization_fwd[i]});
    t.rows.push_back({prof.centers[i], prof.bandwidth, std::string("reverse"),
                      prof.polarization_rev[i]});
  }
  write_output(t, cfg.output);
  if (prof.max_conservation_error > 1e-12)
    throw NumericalCheckError("population conservation violated during scan");
}

double half_split_polarization(const std::vector<double>& p) {
  double pol = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    pol += (i < p.size() / 2 ? 1.0 : -1.0) * p[i];
  return pol;
}

void cmd_ratchet(const RunConfig& cfg) {
  RatchetParams rp = cfg.ratchet.value_or(RatchetParams{0.5, 0.0, 1.0, 1.0, 1.0});
  BinomialParams bp = cfg.binomial.value_or(BinomialParams{4, 0.5, 0.5});

  Table t;
  t.columns = {"quantity", "index", "value"};
  auto scalar = [&](const std::string& name, double v) {
    t.rows.push_back({name, std::int64_t{0}, v});
  };
  scalar("single_sweep_polarization", ratchet_single_sweep(rp));
  scalar("single_sweep_polarization_negative_coupling",
         ratchet_single_sweep(rp, SignConvention::a_par_negative));
  scalar("net_polarization", ratchet_net(rp));

  const std::vector<double> fwd = binomial_forward(bp);
  const std::vector<double> rev = binomial_reverse(bp);
  for (size_t n = 0; n < fwd.size(); ++n)
    t.rows.push_back({std::string("binomial_forward_p"),
                      static_cast<std::int64_t>(n + 1), fwd[n]});
  for (size_t n = 0; n < rev.size(); ++n)
    t.rows.push_back({std::string("binomial_reverse_p"),
                      static_cast<std::int64_t>(n + 1), rev[n]});
  scalar("binomial_forward_polarization", half_split_polarization(fwd));
  scalar("binomial_reverse_polarization", half_split_polarization(rev));
  write_output(t, cfg.output);
}

void cmd_oracle_check(const RunConfig& cfg) {
  const Checkerboard board = build_checkerboard(require_system(cfg));
  if (board.n_nuclei > 4)
    throw std::invalid_argument("oracle-check limited to n_nuclei <= 4");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const StatePopulations initial = StatePopulations::mixed(board.size);

  Table t;
  t.columns = {"table_index", "max_deviation"};
  double worst = 0.0;
  for (int i = 0; i < cfg.oracle.n_tables; ++i) {
    TunnelingTable table = uniform_table(board, 0.0, false);
    for (double& e : table.eta) e = uni(rng);
    SweepSpec spec;
    StatePopulations dp = propagate(board, table, spec, initial);
    if (cfg.oracle.corrupt) dp.m0[0] += 1e-6;
    const StatePopulations bf = brute_force_traversal(board, table, initial);
    double dev = 0.0;
    for (int n = 0; n < board.size; ++n) {
      dev = std::max(dev, std::abs(dp.m0[n] - bf.m0[n]));
      dev = std::max(dev, std::abs(dp.m1[n] - bf.m1[n]));
    }
    worst = std::max(worst, dev);
    t.rows.push_back({std::int64_t{i}, dev});
  }
  t.rows.push_back({std::int64_t{-1}, worst});
  write_output(t, cfg.output);
  if (worst > 1e-10)
    throw NumericalCheckError("dynamic program deviates from oracle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Zener Galton-board hyperpolarization simulator"};
  app.require_subcommand(1);

  CliOverrides o;
  std::string subcommand;
  for (const auto& name :
       {"board", "sweep", "map", "ratchet", "oracle-check"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", o.config_path, "run configuration (JSON)")
        ->required();
    sub->add_option("--out", o.out_path, "output file (default: config/stdout)");
    sub->add_option("--format", o.format, "csv or json");
    sub->add_option("--seed", o.seed, "override config seed");
    sub->add_option("--threads", o.threads, "scan parallelism");
    sub->callback([&subcommand, name] { subcommand = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = load_with_overrides(o);
    if (subcommand == "board")
      cmd_board(cfg);
    else if (subcommand == "sweep")
      cmd_sweep(cfg);
    else if (subcommand == "map")
      cmd_map(cfg, o.threads);
    else if (subcommand == "ratchet")
      cmd_ratchet(cfg);
    else
      cmd_oracle_check(cfg);
  } catch (const NumericalCheckError& e) {
    std::cerr << "numerical check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
