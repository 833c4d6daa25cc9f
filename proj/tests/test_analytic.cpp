#include <cmath>

#include <doctest.h>

#include "galton/analytic.hpp"
#include "galton/oracle.hpp"
#include "test_helpers.hpp"

using namespace galton;
using galton::testing::model_config;

namespace {

double half_split(const std::vector<double>& p) {
  double pol = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    pol += (i < p.size() / 2 ? 1.0 : -1.0) * p[i];
  return pol;
}

// Engine populations for the idealized uniform board: straight-through
// probability q at every node, adiabatic conjugate diagonal, unit population
// entering every row.
std::vector<double> engine_populations(int n, double q, bool reverse) {
  const Checkerboard board = build_checkerboard(model_config(n));
  const TunnelingTable table = uniform_table(board, q, true);
  SweepSpec spec;
  if (reverse) spec.direction = SweepDirection::high_to_low;
  const auto out = laser_reset(
      propagate(board, table, spec, StatePopulations::mixed(board.size)));
  return out.m0;
}

}  // namespace

TEST_CASE("ratchet single sweep") {
  RatchetParams p{1.0, 0.3, 1.0, 1.0, 1.0};
  CHECK(ratchet_single_sweep(p) == doctest::Approx(0.0));
  p = {0.4, 1.0, 1.0, 1.0, 1.0};
  CHECK(ratchet_single_sweep(p) == doctest::Approx(0.0));
  p = {0.5, 0.0, 1.0, 1.0, 1.0};
  CHECK(ratchet_single_sweep(p) == doctest::Approx(1.0));
  CHECK(ratchet_single_sweep(p, SignConvention::a_par_negative) == 0.0);
  // maximized at eta_small = 1/2
  for (double e : {0.1, 0.3, 0.7, 0.9}) {
    RatchetParams q{e, 0.0, 1.0, 1.0, 1.0};
    CHECK(ratchet_single_sweep(q) < 1.0);
    CHECK(ratchet_single_sweep(q) >= 0.0);
  }
  RatchetParams bad{1.2, 0.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(ratchet_single_sweep(bad), std::invalid_argument);
}

TEST_CASE("ratchet net accumulation") {
  RatchetParams p{0.5, 0.0, 1e9, 100.0, 1.0};  // instant repolarization
  CHECK(ratchet_net(p) == doctest::Approx(100.0));
  p.t_total = 0.0;
  CHECK(ratchet_net(p) == doctest::Approx(0.0));
  // w_l = omega_r, T = 1 s, omega_r = 100/s, single-sweep gain 0.5
  p = {0.5, 0.5, 100.0, 100.0, 1.0};
  CHECK(ratchet_single_sweep(p) == doctest::Approx(0.5));
  CHECK(ratchet_net(p) ==
        doctest::Approx((1.0 - std::exp(-1.0)) * 100.0 * 0.5 * 1.0));
  CHECK(ratchet_net(p) == doctest::Approx(31.606).epsilon(1e-4));
}

TEST_CASE("binomial forward populations") {
  for (int n : {1, 2, 3, 4}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const auto pn = binomial_forward({n, p, 1.0 - p});
      double sum = 0.0;
      for (double v : pn) {
        CHECK(v >= 0.0);
        sum += v;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  for (int n : {2, 3, 4})
    CHECK(half_split(binomial_forward({n, 0.5, 0.5})) > 0.0);

  // balanced N=4 board: populations fall off monotonically with state index
  const auto p4 = binomial_forward({4, 0.5, 0.5});
  for (size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] >= p4[i + 1]);
}

TEST_CASE("binomial forward matches the traversal engine") {
  for (int n : {1, 2, 3}) {
    const auto analytic = binomial_forward({n, 0.5, 0.5});
    const auto engine = engine_populations(n, 0.5, false);
    REQUIRE(analytic.size() == engine.size());
    // the closed form averages over entry rows, matching the mixed state
    for (size_t i = 0; i < analytic.size(); ++i)
      CHECK(engine[i] == doctest::Approx(analytic[i]).epsilon(1e-12));
  }
}

TEST_CASE("binomial reverse populations") {
  for (int n : {1, 2, 3, 4}) {
    const BinomialParams bp{n, 0.5, 0.5};
    const auto fwd = binomial_forward(bp);
    const auto rev = binomial_reverse(bp);
    double sum = 0.0;
    for (double v : rev) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(half_split(rev) == doctest::Approx(-half_split(fwd)).epsilon(1e-12));
    // flip relabeling: the reverse sequence is the forward sequence reversed
    for (size_t i = 0; i < fwd.size(); ++i)
      CHECK(rev[i] == doctest::Approx(fwd[fwd.size() - 1 - i]).epsilon(1e-12));
  }
}

TEST_CASE("engine reproduces the closed-form ratchet") {
  // N=1 table {diag a, conj b} against the closed form, mixed-state start
  const Checkerboard board = build_checkerboard(model_config(1));
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (double b : {0.0, 0.3, 0.9}) {
      TunnelingTable t = uniform_table(board, b, false);
      t.at(0, 0) = t.at(1, 1) = a;
      const auto out = laser_reset(propagate(
          board, t, SweepSpec{}, StatePopulations::unit_rows(board.size)));
      const RatchetParams rp{a, b, 1.0, 1.0, 1.0};
      CHECK(polarization(out) ==
            doctest::Approx(ratchet_single_sweep(rp)).epsilon(1e-14));
    }
  }
}

TEST_CASE("binomial parameter validation") {
  CHECK_THROWS_AS(binomial_forward({0, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(binomial_forward({2, 0.6, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(binomial_forward({2, -0.1, 1.1}), std::invalid_argument);
}
