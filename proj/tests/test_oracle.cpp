#include <cmath>
#include <random>

#include <doctest.h>

#include "galton/oracle.hpp"
#include "test_helpers.hpp"

using namespace galton;
using galton::testing::model_config;

TEST_CASE("path enumeration counts and probabilities") {
  const Checkerboard board = build_checkerboard(model_config(2));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  TunnelingTable t = uniform_table(board, 0.0, false);
  for (double& e : t.eta) e = uni(rng);

  CHECK(enumerate_paths(board, t, {1, 1}, {3, 2}).paths.size() == 3);
  const auto trivial = enumerate_paths(board, t, {1, 1}, {1, 1});
  REQUIRE(trivial.paths.size() == 1);
  CHECK(trivial.paths[0].size() == 1);
  CHECK(trivial.probabilities[0] == doctest::Approx(1.0));

  const auto en = enumerate_paths(board, t, {1, 1}, {2, 2});
  REQUIRE(en.paths.size() == 2);
  double sum = 0.0;
  for (double p : en.probabilities) sum += p;
  CHECK(sum == doctest::Approx(traversal_probability(board, t, {1, 1}, {2, 2}))
                   .epsilon(1e-14));

  // path count C(L, k_f - k_i) for a larger rectangle
  const auto big = enumerate_paths(board, t, {1, 1}, {4, 3});
  CHECK(big.paths.size() == 10);  // C(5, 3)

  CHECK_THROWS_AS(enumerate_paths(board, t, {2, 2}, {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("brute force equals the engine on random tables") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int n : {1, 2, 3}) {
    const Checkerboard board = build_checkerboard(model_config(n));
    for (int trial = 0; trial < 3; ++trial) {
      TunnelingTable t = uniform_table(board, 0.0, false);
      for (double& e : t.eta) e = uni(rng);
      StatePopulations init = StatePopulations::mixed(board.size);
      init.m1[0] = 0.125;  // exercise column entries too
      const auto dp = propagate(board, t, SweepSpec{}, init);
      const auto bf = brute_force_traversal(board, t, init);
      for (int i = 0; i < board.size; ++i) {
        CHECK(std::abs(dp.m0[i] - bf.m0[i]) <= 1e-10);
        CHECK(std::abs(dp.m1[i] - bf.m1[i]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("brute force conserves per-entry probability") {
  const Checkerboard board = build_checkerboard(model_config(2));
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  TunnelingTable t = uniform_table(board, 0.0, false);
  for (double& e : t.eta) e = uni(rng);
  for (int row = 0; row < board.size; ++row) {
    StatePopulations init = StatePopulations::zero(board.size);
    init.m0[row] = 1.0;
    const auto out = brute_force_traversal(board, t, init);
    CHECK(out.total() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("brute force identity at full transmission") {
  const Checkerboard board = build_checkerboard(model_config(2));
  const TunnelingTable t = uniform_table(board, 1.0, false);
  const StatePopulations init = StatePopulations::mixed(board.size);
  const auto out = brute_force_traversal(board, t, init);
  for (int i = 0; i < board.size; ++i)
    CHECK(out.m0[i] == doctest::Approx(init.m0[i]));
}

TEST_CASE("brute force size guard") {
  const Checkerboard board = build_checkerboard(model_config(5));
  const TunnelingTable t = uniform_table(board, 0.5, false);
  CHECK_THROWS_AS(
      brute_force_traversal(board, t, StatePopulations::mixed(board.size)),
      std::invalid_argument);
}
