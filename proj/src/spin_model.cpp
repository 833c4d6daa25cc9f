#include "galton/spin_model.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace galton {

namespace {

constexpr double kPi = std::numbers::pi;

int bit(NuclearStateIndex s, int j) { return (s >> j) & 1; }

double sign_for_bit(NuclearStateIndex s, int j) {
  return bit(s, j) ? -1.0 : 1.0;
}

}  // namespace

void SpinSystemConfig::validate() const {
  if (n_nuclei < 1) throw std::invalid_argument("n_nuclei must be >= 1");
  if (rabi < 0.0) throw std::invalid_argument("rabi must be >= 0");
  if (model) {
    if (model->p_exp <= 0.0)
      throw std::invalid_argument("model.p_exp must be > 0");
    if (model->alpha == 0.0)
      throw std::invalid_argument("model.alpha must be nonzero");
    return;
  }
  if (static_cast<int>(a_par.size()) != n_nuclei)
    throw std::invalid_argument("a_par length must equal n_nuclei");
  if (static_cast<int>(a_perp.size()) != n_nuclei)
    throw std::invalid_argument("a_perp length must equal n_nuclei");
  for (double ap : a_perp)
    if (ap < 0.0) throw std::invalid_argument("a_perp entries must be >= 0");
}

ManifoldFrequencies effective_frequencies(const SpinSystemConfig& cfg) {
  cfg.validate();
  ManifoldFrequencies f;
  const int n = cfg.n_nuclei;
  f.omega0.resize(n);
  f.omega1.resize(n);
  f.phi.resize(n);
  if (cfg.model) {
    for (int j = 0; j < n; ++j) {
      const double base = std::pow(static_cast<double>(j + 1), cfg.model->p_exp);
      f.omega0[j] = base;
      f.omega1[j] = cfg.model->alpha * base;
      f.phi[j] = cfg.model->phi.value_or(kPi / 2.0);
    }
    return f;
  }
  const double wl = cfg.larmor();
  for (int j = 0; j < n; ++j) {
    const double par = wl + cfg.a_par[j];
    f.omega1[j] = std::hypot(par, cfg.a_perp[j]);
    f.phi[j] = std::atan2(cfg.a_perp[j], par);
    // m_s=0 frequency: Larmor plus the second-order hyperfine shift.
    f.omega0[j] = wl + (cfg.delta != 0.0
                            ? cfg.gamma_e_b0 * cfg.a_perp[j] / cfg.delta
                            : 0.0);
  }
  return f;
}

double eigenenergy_m0(const ManifoldFrequencies& freqs, NuclearStateIndex state) {
  const int n = static_cast<int>(freqs.omega0.size());
  if (state >= (NuclearStateIndex{1} << n))
    throw std::out_of_range("nuclear state index out of range");
  double e = 0.0;
  for (int j = 0; j < n; ++j) e += sign_for_bit(state, j) * freqs.omega0[j];
  return e;
}

double eigenenergy_m1_at_zero(const SpinSystemConfig& cfg,
                              const ManifoldFrequencies& freqs,
                              NuclearStateIndex state) {
  const int n = static_cast<int>(freqs.omega1.size());
  if (state >= (NuclearStateIndex{1} << n))
    throw std::out_of_range("nuclear state index out of range");
  double e = cfg.manifold_offset();
  for (int j = 0; j < n; ++j) e += sign_for_bit(state, j) * freqs.signed_omega1(j);
  return e;
}

double perturbative_gap(const SpinSystemConfig& cfg,
                        const ManifoldFrequencies& freqs,
                        NuclearStateIndex state_m0, NuclearStateIndex state_m1) {
  const NuclearStateIndex flips = state_m0 ^ state_m1;
  double eps = cfg.rabi;
  for (int j = 0; j < cfg.n_nuclei; ++j) {
    if (!((flips >> j) & 1)) continue;
    // tan(theta_j) = A_perp/omega1 = sin(phi_j)
    const double t = std::abs(std::sin(freqs.phi[j]));
    eps *= 2.0 * t / std::sqrt(1.0 + t * t);
  }
  return eps;
}

double perturbative_gap(const SpinSystemConfig& cfg, NuclearStateIndex state_m0,
                        NuclearStateIndex state_m1) {
  return perturbative_gap(cfg, effective_frequencies(cfg), state_m0, state_m1);
}

Eigen::MatrixXd build_rotating_hamiltonian(const SpinSystemConfig& cfg,
                                           double omega_mw) {
  cfg.validate();
  if (cfg.n_nuclei > 8)
    throw std::invalid_argument("dense Hamiltonian limited to n_nuclei <= 8");
  const ManifoldFrequencies f = effective_frequencies(cfg);
  const int n = cfg.n_nuclei;
  const int ns = 1 << n;
  const int dim = 2 * ns;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  for (NuclearStateIndex s = 0; s < static_cast<NuclearStateIndex>(ns); ++s) {
    h(s, s) = eigenenergy_m0(f, s);
    double e1 = cfg.manifold_offset() - omega_mw;
    // Lab-basis diagonal: the transverse part of the hyperfine field lives in
    // the off-diagonal flip terms below.
    for (int j = 0; j < n; ++j)
      e1 += sign_for_bit(s, j) * f.signed_omega1(j) * std::abs(std::cos(f.phi[j]));
    h(ns + s, ns + s) = e1;
    // Drive couples the manifolds without touching the nuclei; the element
    // Omega_e/2 makes the direct anti-crossing gap equal Omega_e.
    h(s, ns + s) = h(ns + s, s) = cfg.rabi / 2.0;
    // Transverse hyperfine flips one nucleus within m_s=+1.  The element
    // 4*omega1*sin(phi) reproduces the perturbative single- and double-flip
    // gaps of the adiabatic-basis reduction.
    for (int j = 0; j < n; ++j) {
      const NuclearStateIndex t = s ^ (NuclearStateIndex{1} << j);
      if (t < s) continue;
      const double c = 4.0 * std::abs(f.omega1[j] * std::sin(f.phi[j]));
      h(ns + s, ns + t) = h(ns + t, ns + s) = c;
    }
  }
  return h;
}

double exact_gap_scan(const SpinSystemConfig& cfg, NuclearStateIndex state_m0,
                      NuclearStateIndex state_m1, double scan_halfwidth,
                      int n_samples) {
  if (scan_halfwidth <= 0.0)
    throw std::invalid_argument("scan_halfwidth must be > 0");
  if (n_samples < 3) throw std::invalid_argument("n_samples must be >= 3");
  const ManifoldFrequencies f = effective_frequencies(cfg);
  const int ns = 1 << cfg.n_nuclei;
  // Predicted crossing frequency (Eq. 12 form): E_k^(1)(0) - E_l^(0).
  const double w_cross =
      eigenenergy_m1_at_zero(cfg, f, state_m1) - eigenenergy_m0(f, state_m0);

  // The two branches of interest are identified per sample by the largest
  // eigenvector weight in the span of the two crossing basis states; this is
  // the overlap-continuity criterion applied against the fixed asymptotic
  // states.
  auto branch_gap = [&](double w) {
    const Eigen::MatrixXd h = build_rotating_hamiltonian(cfg, w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const auto& vecs = es.eigenvectors();
    int best = -1, second = -1;
    double pb = -1.0, ps = -1.0;
    for (int i = 0; i < h.rows(); ++i) {
      const double a = vecs(state_m0, i);
      const double b = vecs(ns + state_m1, i);
      const double proj = a * a + b * b;
      if (proj > pb) {
        second = best;
        ps = pb;
        best = i;
        pb = proj;
      } else if (proj > ps) {
        second = i;
        ps = proj;
      }
    }
    if (second < 0 || ps < 0.25)
      throw std::runtime_error(
          "degenerate branches: cannot disambiguate crossing levels");
    return std::abs(es.eigenvalues()[best] - es.eigenvalues()[second]);
  };

  double lo = w_cross - scan_halfwidth, hi = w_cross + scan_halfwidth;
  double best_w = w_cross, best_gap = 0.0;
  for (int pass = 0; pass < 6; ++pass) {
    const double step = (hi - lo) / (n_samples - 1);
    best_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
      const double w = lo + i * step;
      const double g = branch_gap(w);
      if (g < best_gap) {
        best_gap = g;
        best_w = w;
      }
    }
    lo = best_w - 2.0 * step;
    hi = best_w + 2.0 * step;
  }
  return best_gap;
}

}  // namespace galton
