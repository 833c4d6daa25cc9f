#include "galton/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace galton {

namespace {

// C(a, b) * p^x * q^y with C(a, b) = 0 for any negative argument (paths that
// would leave the board).  Exact combinatorics while the coefficient fits in
// an integer-exact double, log-domain evaluation beyond (large boards need
// C(509, 254)-scale terms).
double binomial_term(int a, int b, double p, int x, double q, int y) {
  if (b < 0 || a < b) return 0.0;
  auto ipow = [](double base, int e) {
    if (e == 0) return 1.0;  // 0^0 = 1 (absent factor)
    return std::pow(base, e);
  };
  if ((p == 0.0 && x > 0) || (q == 0.0 && y > 0)) return 0.0;
  if (a <= 52) {
    double c = 1.0;
    for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c * ipow(p, x) * ipow(q, y);
  }
  double lg = std::lgamma(a + 1.0) - std::lgamma(b + 1.0) -
              std::lgamma(a - b + 1.0);
  if (x > 0) lg += x * std::log(p);
  if (y > 0) lg += y * std::log(q);
  return std::exp(lg);
}

}  // namespace

void RatchetParams::validate() const {
  if (eta_small < 0.0 || eta_small > 1.0 || eta_large < 0.0 || eta_large > 1.0)
    throw std::invalid_argument("tunneling probabilities must lie in [0,1]");
  if (w_l <= 0.0 || omega_r <= 0.0)
    throw std::invalid_argument("rates must be positive");
  if (t_total < 0.0) throw std::invalid_argument("t_total must be >= 0");
}

double ratchet_single_sweep(const RatchetParams& params, SignConvention convention) {
  params.validate();
  if (convention == SignConvention::a_par_negative) return 0.0;
  const double d = 2.0 * params.eta_small - 1.0;
  return (1.0 - params.eta_large) * (1.0 - d * d);
}

double ratchet_net(const RatchetParams& params, SignConvention convention) {
  params.validate();
  return (1.0 - std::exp(-params.w_l / params.omega_r)) * params.t_total *
         params.omega_r * ratchet_single_sweep(params, convention);
}

void BinomialParams::validate() const {
  if (n_nuclei < 1) throw std::invalid_argument("n_nuclei must be >= 1");
  if (p_down < 0.0 || p_down > 1.0 || q_right < 0.0 || q_right > 1.0)
    throw std::invalid_argument("p and q must lie in [0,1]");
  if (std::abs(p_down + q_right - 1.0) > 1e-12)
    throw std::invalid_argument("p_down + q_right must equal 1");
}

std::vector<double> binomial_forward(const BinomialParams& params) {
  params.validate();
  const int L = 1 << params.n_nuclei;
  const double p = params.p_down, q = params.q_right;
  std::vector<double> pn(L);
  for (int n = 1; n <= L; ++n) {
    double sum = (n == 1) ? 1.0 : 0.0;  // f(n): entry (1, 2^N) travels down
    for (int l = 1; l <= L - 1; ++l) {
      // down-exit at (n, 2^N): n-2 right steps, 2^N-l-1 down steps
      sum += binomial_term((n - 2) + (L - l - 1), n - 2, p, L - l, q, n - 2);
      // right-exit at (2^N, 2^N-n+1): 2^N-n-l down steps
      sum += binomial_term((L - n - l) + (L - 2), L - n - l, p, L - n - l, q, L - 1);
    }
    pn[n - 1] = sum / L;
  }
  return pn;
}

std::vector<double> binomial_reverse(const BinomialParams& params) {
  params.validate();
  const int L = 1 << params.n_nuclei;
  const double p = params.p_down, q = params.q_right;
  std::vector<double> ps(L);
  // Flip relabeling s = 2^N - n with s running over 0 .. 2^N-1.
  for (int s = 0; s <= L - 1; ++s) {
    double sum = (L - s == 1) ? 1.0 : 0.0;
    for (int l = 1; l <= L - 1; ++l) {
      sum += binomial_term((L - s - 2) + (L - l - 1), L - s - 2, p, L - l, q,
                           L - s - 2);
      sum += binomial_term((s - l) + (L - 2), s - l, p, s - l, q, L - 1);
    }
    ps[s] = sum / L;
  }
  return ps;
}

}  // namespace galton
