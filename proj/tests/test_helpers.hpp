#pragma once

#include <vector>

#include "galton/checkerboard.hpp"
#include "galton/spin_model.hpp"

namespace galton::testing {

// Power-law board config with the manifold offset zeroed for readable
// coordinates; alpha < 0 models the reversed (negative-coupling) ordering.
inline SpinSystemConfig model_config(int n, double alpha = 5.0,
                                     double p_exp = 1.1, double rabi = 0.1) {
  SpinSystemConfig cfg;
  cfg.n_nuclei = n;
  cfg.delta = 0.0;
  cfg.gamma_e_b0 = 0.0;
  cfg.rabi = rabi;
  cfg.model = PowerLawModel{alpha, p_exp};
  return cfg;
}

// Physical hyperfine configuration; gamma_n = 1 and b0 = 100*larmor make the
// Larmor frequency explicit.
inline SpinSystemConfig physical_config(std::vector<double> a_par,
                                        std::vector<double> a_perp,
                                        double larmor, double rabi) {
  SpinSystemConfig cfg;
  cfg.n_nuclei = static_cast<int>(a_par.size());
  cfg.a_par = std::move(a_par);
  cfg.a_perp = std::move(a_perp);
  cfg.gamma_n = 1.0;
  cfg.b0 = 100.0 * larmor;
  cfg.delta = 0.0;
  cfg.gamma_e_b0 = 0.0;
  cfg.rabi = rabi;
  return cfg;
}

}  // namespace galton::testing
