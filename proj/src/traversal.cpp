#include "galton/traversal.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace galton {

StatePopulations StatePopulations::zero(int n_states) {
  StatePopulations p;
  p.m0.assign(n_states, 0.0);
  p.m1.assign(n_states, 0.0);
  return p;
}

StatePopulations StatePopulations::mixed(int n_states) {
  StatePopulations p = zero(n_states);
  for (double& v : p.m0) v = 1.0 / n_states;
  return p;
}

StatePopulations StatePopulations::unit_rows(int n_states) {
  StatePopulations p = zero(n_states);
  for (double& v : p.m0) v = 1.0;
  return p;
}

double StatePopulations::total() const {
  double t = 0.0;
  for (double v : m0) t += v;
  for (double v : m1) t += v;
  return t;
}

Eigen::Matrix2d transfer_matrix(double eta) {
  if (eta < 0.0 || eta > 1.0)
    throw std::invalid_argument("eta must lie in [0,1]");
  Eigen::Matrix2d m;
  m << eta, 1.0 - eta, 1.0 - eta, eta;
  return m;
}

StatePopulations propagate(const Checkerboard& board, const TunnelingTable& table,
                           const SweepSpec& sweep, const StatePopulations& initial) {
  const int L = board.size;
  if (table.size != L)
    throw std::invalid_argument("tunneling table size does not match board");
  if (static_cast<int>(initial.m0.size()) != L ||
      static_cast<int>(initial.m1.size()) != L)
    throw std::invalid_argument("initial populations size does not match board");
  if (sweep.window && sweep.window->bandwidth <= 0.0)
    throw std::invalid_argument("window bandwidth must be > 0");
  if (!sweep.allow_degenerate) {
    for (int k = 0; k + 1 < L; ++k)
      if (board.col_energy[k] == board.col_energy[k + 1])
        throw std::invalid_argument(
            "degenerate column frequencies; set allow_degenerate to override");
  }

  // The high_to_low sweep traverses rows right-to-left and columns
  // bottom-to-top; this is the forward recursion on the 180-degree rotated
  // board, so a single forward kernel runs both directions through an index
  // map.
  const bool rev = sweep.direction == SweepDirection::high_to_low;
  auto map_k = [&](int k) { return rev ? L - 1 - k : k; };
  auto map_l = [&](int l) { return rev ? L - 1 - l : l; };

  auto in_window = [&](int k, int l) {
    if (!sweep.window) return true;
    const double f = board.frequency(k, l);
    return f >= sweep.window->f0 - sweep.window->bandwidth / 2.0 &&
           f <= sweep.window->f0 + sweep.window->bandwidth / 2.0;
  };

  // right[l]: m_s=0 population currently travelling along (mapped) row l.
  std::vector<double> right(L);
  for (int l = 0; l < L; ++l) right[l] = initial.m0[board.l_rank[map_l(l)]];

  StatePopulations out = StatePopulations::zero(L);
  for (int k = 0; k < L; ++k) {
    // m_s=+1 population entering the (mapped) column from the leading edge.
    double down = initial.m1[board.k_rank[map_k(k)]];
    for (int l = 0; l < L; ++l) {
      const int bk = map_k(k), bl = map_l(l);
      if (!in_window(bk, bl)) continue;
      const double eta = table.at(bk, bl);
      const double straight = right[l], bend = down;
      right[l] = eta * straight + (1.0 - eta) * bend;
      down = (1.0 - eta) * straight + eta * bend;
    }
    out.m1[board.k_rank[map_k(k)]] += down;
  }
  for (int l = 0; l < L; ++l) out.m0[board.l_rank[map_l(l)]] += right[l];
  return out;
}

StatePopulations laser_reset(const StatePopulations& pops) {
  StatePopulations out = pops;
  for (size_t n = 0; n < out.m0.size(); ++n) {
    out.m0[n] += out.m1[n];
    out.m1[n] = 0.0;
  }
  return out;
}

double polarization(const StatePopulations& pops, SignConvention convention) {
  const int n = static_cast<int>(pops.m0.size());
  double p = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i < n / 2) ? 1.0 : -1.0;
    p += w * (pops.m0[i] + pops.m1[i]);
  }
  return convention == SignConvention::a_par_negative ? -p : p;
}

double path_probability(const Checkerboard& board, const TunnelingTable& table,
                        const std::vector<std::pair<int, int>>& path) {
  if (path.empty()) return 1.0;
  const int L = board.size;
  double prob = 1.0;
  for (size_t i = 0; i < path.size(); ++i) {
    const auto [k, l] = path[i];
    if (k < 1 || k > L || l < 1 || l > L)
      throw std::invalid_argument("path node out of board range");
    const double eta = table.at(k - 1, l - 1);
    bool straight;
    if (i + 1 < path.size()) {
      const int dk = path[i + 1].first - k, dl = path[i + 1].second - l;
      if (!((dk == 1 && dl == 0) || (dk == 0 && dl == 1)))
        throw std::invalid_argument("path steps must be unit right/down moves");
      // Entry direction: rightward at the first node, then the direction of
      // the previous step.  Straight-through keeps it.
      const bool entered_right = i == 0 || path[i].first != path[i - 1].first;
      straight = entered_right ? (dl == 0) : (dk == 0);
    } else {
      straight = true;  // exit in the arrival direction
    }
    prob *= straight ? eta : 1.0 - eta;
  }
  return prob;
}

double traversal_probability(const Checkerboard& board, const TunnelingTable& table,
                             std::pair<int, int> from, std::pair<int, int> to) {
  const int ki = from.first - 1, li = from.second - 1;
  const int kf = to.first - 1, lf = to.second - 1;
  if (kf < ki || lf < li)
    throw std::invalid_argument("target is not monotonically reachable");
  const int w = kf - ki + 1, h = lf - li + 1;
  // arr_r/arr_d: probability of arriving at each rectangle node moving
  // rightward/downward.
  std::vector<double> arr_r(static_cast<size_t>(w) * h, 0.0), arr_d = arr_r;
  arr_r[0] = 1.0;
  for (int dk = 0; dk < w; ++dk) {
    for (int dl = 0; dl < h; ++dl) {
      const size_t i = static_cast<size_t>(dk) * h + dl;
      if (dk == w - 1 && dl == h - 1) break;
      const double eta = table.at(ki + dk, li + dl);
      const double out_r = eta * arr_r[i] + (1.0 - eta) * arr_d[i];
      const double out_d = (1.0 - eta) * arr_r[i] + eta * arr_d[i];
      if (dk + 1 < w) arr_r[i + h] += out_r;
      if (dl + 1 < h) arr_d[i + 1] += out_d;
    }
  }
  return arr_r.back() + arr_d.back();
}

StatePopulations accumulate_sweeps(const Checkerboard& board,
                                   const TunnelingTable& table,
                                   const SweepSpec& sweep,
                                   const StatePopulations& initial,
                                   int n_sweeps, double w_l, double omega_r) {
  if (n_sweeps < 0) throw std::invalid_argument("n_sweeps must be >= 0");
  if (omega_r <= 0.0 || w_l < 0.0)
    throw std::invalid_argument("rates must be positive");
  const double eff = 1.0 - std::exp(-w_l / omega_r);
  StatePopulations pops = initial;
  for (int i = 0; i < n_sweeps; ++i) {
    const StatePopulations swept = laser_reset(propagate(board, table, sweep, pops));
    for (size_t n = 0; n < pops.m0.size(); ++n) {
      pops.m0[n] = eff * swept.m0[n] + (1.0 - eff) * pops.m0[n];
      pops.m1[n] = eff * swept.m1[n] + (1.0 - eff) * pops.m1[n];
    }
  }
  return pops;
}

}  // namespace galton
