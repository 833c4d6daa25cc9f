#pragma once

#include <vector>

#include "galton/traversal.hpp"

namespace galton {

// Parameters of the single-nucleus spin ratchet.
struct RatchetParams {
  double eta_small = 0.0;  // tunneling at the nuclear-flip gaps
  double eta_large = 0.0;  // tunneling at the electron-only gaps
  double w_l = 1.0;        // electron repolarization rate, 1/s
  double omega_r = 1.0;    // sweep repetition rate, 1/s
  double t_total = 0.0;    // accumulation time, s

  void validate() const;
};

// Polarization gained by one full forward sweep of the N=1 board:
// (1 - eta_large) * [1 - (2 eta_small - 1)^2].  The dominant-negative-A_par
// forward sweep produces no net polarization and returns 0.
double ratchet_single_sweep(const RatchetParams& params,
                            SignConvention convention = SignConvention::a_par_positive);

// Net polarization over t_total: [1 - exp(-w_l/omega_r)] * T * omega_r * P1.
double ratchet_net(const RatchetParams& params,
                   SignConvention convention = SignConvention::a_par_positive);

// Idealized Galton-board redistribution probabilities: p down, q right.
struct BinomialParams {
  int n_nuclei = 1;
  double p_down = 0.5;
  double q_right = 0.5;

  void validate() const;
};

// Closed-form exit populations P_n (state rank order, all-down first) for a
// full forward sweep of the uniform board with adiabatic conjugate diagonal.
std::vector<double> binomial_forward(const BinomialParams& params);

// Same for the reversed sweep; equals the forward sequence under the
// state relabeling n -> 2^N + 1 - n.
std::vector<double> binomial_reverse(const BinomialParams& params);

}  // namespace galton
