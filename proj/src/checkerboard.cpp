#include "galton/checkerboard.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace galton {

namespace {

// Ranks of the nuclear states in ascending-E^(0) order (all-down first for
// positive frequencies): rank_of_state[s] = n-1 for state s.
std::vector<int> state_ranks(const ManifoldFrequencies& f) {
  const int ns = 1 << f.omega0.size();
  std::vector<NuclearStateIndex> order(ns);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NuclearStateIndex a, NuclearStateIndex b) {
                     return eigenenergy_m0(f, a) < eigenenergy_m0(f, b);
                   });
  std::vector<int> rank(ns);
  for (int i = 0; i < ns; ++i) rank[order[i]] = i;
  return rank;
}

}  // namespace

Checkerboard build_checkerboard(const SpinSystemConfig& cfg) {
  cfg.validate();
  if (cfg.n_nuclei > 10)
    throw std::invalid_argument("checkerboard limited to n_nuclei <= 10");
  const ManifoldFrequencies f = effective_frequencies(cfg);
  const int ns = 1 << cfg.n_nuclei;

  Checkerboard b;
  b.n_nuclei = cfg.n_nuclei;
  b.size = ns;
  b.center = {cfg.manifold_offset(), 0.0};

  b.k_states.resize(ns);
  b.l_states.resize(ns);
  std::iota(b.k_states.begin(), b.k_states.end(), 0);
  std::iota(b.l_states.begin(), b.l_states.end(), 0);
  // Columns ascend in E^(1)(0), rows descend in E^(0); stable tie-break on
  // state index for degenerate level sets.
  std::stable_sort(b.k_states.begin(), b.k_states.end(),
                   [&](NuclearStateIndex a, NuclearStateIndex c) {
                     return eigenenergy_m1_at_zero(cfg, f, a) <
                            eigenenergy_m1_at_zero(cfg, f, c);
                   });
  std::stable_sort(b.l_states.begin(), b.l_states.end(),
                   [&](NuclearStateIndex a, NuclearStateIndex c) {
                     return eigenenergy_m0(f, a) > eigenenergy_m0(f, c);
                   });

  b.col_energy.resize(ns);
  b.row_energy.resize(ns);
  for (int k = 0; k < ns; ++k)
    b.col_energy[k] = eigenenergy_m1_at_zero(cfg, f, b.k_states[k]);
  for (int l = 0; l < ns; ++l)
    b.row_energy[l] = eigenenergy_m0(f, b.l_states[l]);

  const std::vector<int> rank = state_ranks(f);
  b.k_rank.resize(ns);
  b.l_rank.resize(ns);
  for (int k = 0; k < ns; ++k) b.k_rank[k] = rank[b.k_states[k]];
  for (int l = 0; l < ns; ++l) b.l_rank[l] = rank[b.l_states[l]];

  b.gaps.resize(static_cast<size_t>(ns) * ns);
  for (int k = 0; k < ns; ++k)
    for (int l = 0; l < ns; ++l)
      b.gaps[k * ns + l] =
          perturbative_gap(cfg, f, b.l_states[l], b.k_states[k]);
  return b;
}

SymmetryReport verify_symmetries(const Checkerboard& b, double tol) {
  SymmetryReport r;
  const int L = b.size;
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      const int km = L - 1 - k, lm = L - 1 - l;
      const double dx = b.frequency(k, l) - b.center.first;
      const double dy = b.energy(l) - b.center.second;
      const double dxm = b.frequency(km, lm) - b.center.first;
      const double dym = b.energy(lm) - b.center.second;
      r.max_coord_violation =
          std::max(r.max_coord_violation,
                   std::abs(std::hypot(dx, dy) - std::hypot(dxm, dym)));
      r.max_gap_violation = std::max(
          r.max_gap_violation, std::abs(b.gap(k, l) - b.gap(km, lm)));
    }
  }
  r.ok = r.max_coord_violation <= tol && r.max_gap_violation <= tol;
  return r;
}

TunnelingTable tunneling_table(const Checkerboard& b, double sweep_rate,
                               bool conj_diag_adiabatic) {
  if (sweep_rate <= 0.0)
    throw std::invalid_argument("sweep_rate must be > 0");
  TunnelingTable t;
  t.size = b.size;
  t.sweep_rate = sweep_rate;
  t.eta.resize(b.gaps.size());
  for (int k = 0; k < b.size; ++k)
    for (int l = 0; l < b.size; ++l) {
      const double eps = b.gap(k, l);
      t.at(k, l) = std::exp(-eps * eps / sweep_rate);
    }
  if (conj_diag_adiabatic)
    for (int k = 0; k < b.size; ++k) t.at(k, b.size - 1 - k) = 0.0;
  return t;
}

TunnelingTable uniform_table(const Checkerboard& b, double eta,
                             bool conj_diag_adiabatic) {
  if (eta < 0.0 || eta > 1.0)
    throw std::invalid_argument("eta must lie in [0,1]");
  TunnelingTable t;
  t.size = b.size;
  t.sweep_rate = 0.0;
  t.eta.assign(static_cast<size_t>(b.size) * b.size, eta);
  if (conj_diag_adiabatic)
    for (int k = 0; k < b.size; ++k) t.at(k, b.size - 1 - k) = 0.0;
  return t;
}

}  // namespace galton
