#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace galton {

// Power-law frequency model: omega_j^(0) = j^p, omega_j^(1) = alpha * j^p.
// A negative alpha models the dominant-negative-A_par regime (reversed level
// ordering in the m_s=+1 manifold).
struct PowerLawModel {
  double alpha = 5.0;
  double p_exp = 1.1;
  std::optional<double> phi;  // mixing angle override, default pi/2
};

// Physical parameters of the central electronic spin coupled to N nuclei.
// All frequencies in MHz (hbar = 1); b0 in mT, gamma_n in kHz/G.
struct SpinSystemConfig {
  int n_nuclei = 1;
  std::vector<double> a_par;   // A_j^par, MHz
  std::vector<double> a_perp;  // A_j^perp, MHz, >= 0
  double b0 = 0.0;             // magnetic field, mT
  double gamma_n = 1.07;       // nuclear gyromagnetic ratio, kHz/G
  double gamma_e_b0 = 0.0;     // electronic Zeeman shift gamma_e*B0, MHz
  double delta = 2870.0;       // zero-field splitting, MHz
  double rabi = 0.0;           // drive Rabi frequency Omega_e, MHz
  std::optional<PowerLawModel> model;

  // Nuclear Larmor frequency in MHz (b0 mT -> 10 G, gamma_n kHz/G -> MHz).
  double larmor() const { return gamma_n * 1e-3 * b0 * 10.0; }
  // Energy offset of the m_s=+1 manifold.
  double manifold_offset() const { return delta + gamma_e_b0; }
  void validate() const;  // throws std::invalid_argument
};

// Effective nuclear frequencies per manifold.
//
// omega0[j]: m_s=0 frequency (always >= 0 here).
// omega1[j]: m_s=+1 frequency. Physical parameters give the magnitude
//   sqrt((omega_L+A_par)^2 + A_perp^2) with the orientation of the dressed
//   quantization axis carried by phi (phi > pi/2 when omega_L+A_par < 0);
//   the power-law model stores alpha*j^p directly, sign included.
// phi[j]: mixing angle in [0, pi]; 0 (or pi) iff A_perp = 0.
struct ManifoldFrequencies {
  std::vector<double> omega0;
  std::vector<double> omega1;
  std::vector<double> phi;

  // Signed m_s=+1 frequency: the energy of the nuclear level adiabatically
  // connected to |up> is +signed_omega1, so the ordering of the manifold
  // reverses when the hyperfine field overturns the Zeeman field.
  double signed_omega1(int j) const {
    return phi[j] <= 1.5707963267948966 ? omega1[j] : -omega1[j];
  }
};

// Nuclear spin configuration, bit j = 0 for up, 1 for down.
using NuclearStateIndex = std::uint32_t;

ManifoldFrequencies effective_frequencies(const SpinSystemConfig& cfg);

// Sum_j (-1)^h_j omega_j^(0): eigenenergy in the m_s=0 manifold.
double eigenenergy_m0(const ManifoldFrequencies& freqs, NuclearStateIndex state);

// (Delta + gamma_e B0) + Sum_j (-1)^h_j omega_j^(1), evaluated at zero drive
// frequency; the caller applies the -omega_mw shift of the rotating frame.
double eigenenergy_m1_at_zero(const SpinSystemConfig& cfg,
                              const ManifoldFrequencies& freqs,
                              NuclearStateIndex state);

// Perturbative anti-crossing gap between |0,S_l> and |+1,S_k>.  With F the
// set of nuclei whose bit differs: eps = Omega_e for empty F, otherwise
// eps = Omega_e * prod_{j in F} 2 sin(theta_j), tan(theta_j) = A_perp/omega1
// (= sin phi).  The product form extends the one- and two-flip results; it
// is validated against exact diagonalization for N <= 2.
double perturbative_gap(const SpinSystemConfig& cfg,
                        const ManifoldFrequencies& freqs,
                        NuclearStateIndex state_m0, NuclearStateIndex state_m1);
double perturbative_gap(const SpinSystemConfig& cfg, NuclearStateIndex state_m0,
                        NuclearStateIndex state_m1);

// Rotating-frame Hamiltonian on the {m_s=0,+1} x nuclear space, dimension
// 2*2^N; basis index = manifold*2^N + state.  Real symmetric.
Eigen::MatrixXd build_rotating_hamiltonian(const SpinSystemConfig& cfg,
                                           double omega_mw);

// Minimum separation of the two adiabatic branches that connect to
// |0,state_m0> and |+1,state_m1>, scanned over omega_mw around the predicted
// crossing.  Branches are tracked by eigenvector-overlap continuity; throws
// if the branch assignment becomes ambiguous.
double exact_gap_scan(const SpinSystemConfig& cfg, NuclearStateIndex state_m0,
                      NuclearStateIndex state_m1, double scan_halfwidth,
                      int n_samples);

}  // namespace galton
