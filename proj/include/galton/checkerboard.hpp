#pragma once

#include <utility>
#include <vector>

#include "galton/spin_model.hpp"

namespace galton {

// The 2^N x 2^N grid of anti-crossing points I_{k,l}.  Column k runs over the
// m_s=+1 levels sorted ascending in E^(1)(0); row l runs over the m_s=0
// levels sorted descending in E^(0), so I_{1,1} joins the all-up m_s=0 state
// with the all-down m_s=+1 state for positive couplings.  Indices are 0-based
// internally; exports are 1-based.
struct Checkerboard {
  int n_nuclei = 0;
  int size = 0;                         // 2^N
  std::vector<double> col_energy;       // E^(1)(0) per column k
  std::vector<double> row_energy;       // E^(0) per row l
  std::vector<double> gaps;             // eps_{k,l}, layout k*size + l
  std::pair<double, double> center;     // O = (Delta + gamma_e B0, 0)
  std::vector<NuclearStateIndex> k_states;
  std::vector<NuclearStateIndex> l_states;
  // State rank per column/row: position of the attached nuclear state in the
  // ascending-E^(0) order (all-down first); this is the population index n-1.
  std::vector<int> k_rank;
  std::vector<int> l_rank;

  double gap(int k, int l) const { return gaps[k * size + l]; }
  // Crossing coordinate I_{k,l} = (E_k^(1)(0) - E_l^(0), E_l^(0)).
  double frequency(int k, int l) const { return col_energy[k] - row_energy[l]; }
  double energy(int l) const { return row_energy[l]; }
};

// Tunneling probabilities eta_{k,l} = exp(-eps^2 / sweep_rate), optionally
// forcing the conjugate diagonal (electron-only crossings) adiabatic.
struct TunnelingTable {
  int size = 0;
  std::vector<double> eta;  // layout k*size + l
  double sweep_rate = 0.0;  // omega_dot_MW = B * omega_r, MHz^2

  double at(int k, int l) const { return eta[k * size + l]; }
  double& at(int k, int l) { return eta[k * size + l]; }
};

Checkerboard build_checkerboard(const SpinSystemConfig& cfg);

struct SymmetryReport {
  double max_coord_violation = 0.0;  // |O - I_{k,l}| vs mirrored point
  double max_gap_violation = 0.0;    // eps_{k,l} vs mirrored point
  bool ok = false;
};

// Checks the mirror symmetries about the board center:
// |O - I_{k,l}| = |O - I_{L-k+1,L-l+1}| and eps_{k,l} = eps_{L-k+1,L-l+1}.
SymmetryReport verify_symmetries(const Checkerboard& board, double tol);

TunnelingTable tunneling_table(const Checkerboard& board, double sweep_rate,
                               bool conj_diag_adiabatic);

// Constant eta everywhere (optionally except an adiabatic conjugate
// diagonal); used for idealized Galton-board studies where the gap model is
// replaced by a uniform bend probability.
TunnelingTable uniform_table(const Checkerboard& board, double eta,
                             bool conj_diag_adiabatic);

}  // namespace galton
