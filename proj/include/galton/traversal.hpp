#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "galton/checkerboard.hpp"

namespace galton {

enum class SweepDirection { low_to_high, high_to_low };

// Frequency window [f0 - bandwidth/2, f0 + bandwidth/2].
struct SweepWindow {
  double f0 = 0.0;
  double bandwidth = 0.0;
};

struct SweepSpec {
  SweepDirection direction = SweepDirection::low_to_high;
  std::optional<SweepWindow> window;  // absent: full sweep
  double rate = 1.0;                  // omega_dot_MW, MHz^2
  bool allow_degenerate = false;      // skip the column-degeneracy guard
};

// Per-nuclear-state populations in each electronic manifold, indexed by the
// state rank n-1 (ascending E^(0), all-down first).
struct StatePopulations {
  std::vector<double> m0;
  std::vector<double> m1;

  static StatePopulations zero(int n_states);
  // Normalized maximally-mixed nuclear state in m_s=0.
  static StatePopulations mixed(int n_states);
  // Unit population in every m_s=0 state (per-state probability bookkeeping).
  static StatePopulations unit_rows(int n_states);
  double total() const;
};

// [[eta, 1-eta], [1-eta, eta]] acting on (straight, bend) components.
Eigen::Matrix2d transfer_matrix(double eta);

// Runs the swept drive over the board: populations enter rows (m_s=0) and
// columns (m_s=+1) at the leading window edge and bifurcate at each
// in-window crossing with probability eta to continue straight.  Returns the
// exit populations per state; total population is conserved exactly.
StatePopulations propagate(const Checkerboard& board, const TunnelingTable& table,
                           const SweepSpec& sweep, const StatePopulations& initial);

// Optical reset: merges m_s=+1 population into m_s=0 per nuclear state.
StatePopulations laser_reset(const StatePopulations& pops);

enum class SignConvention { a_par_positive, a_par_negative };

// Net excess of nuclear-down over nuclear-up population (first vs second
// half of the ascending-E^(0) state order).
double polarization(const StatePopulations& pops,
                    SignConvention convention = SignConvention::a_par_positive);

// Probability of one monotone right/down trajectory (1-based node
// coordinates): eta at straight-through nodes, 1-eta at bends; entry is
// rightward and the final node is counted as straight-through.
double path_probability(const Checkerboard& board, const TunnelingTable& table,
                        const std::vector<std::pair<int, int>>& path);

// Probability of arriving at `to` having entered `from` rightward, summed
// over all monotone lattice paths (dynamic program, not enumeration).
double traversal_probability(const Checkerboard& board, const TunnelingTable& table,
                             std::pair<int, int> from, std::pair<int, int> to);

// Repeated sweep + reset with per-sweep electron repolarization efficiency
// 1 - exp(-w_l/omega_r); with efficiency e, each sweep acts on the state
// with weight e and leaves it untouched with weight 1-e.
StatePopulations accumulate_sweeps(const Checkerboard& board,
                                   const TunnelingTable& table,
                                   const SweepSpec& sweep,
                                   const StatePopulations& initial,
                                   int n_sweeps, double w_l, double omega_r);

}  // namespace galton
