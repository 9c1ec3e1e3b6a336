#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nrg/oracle.hpp"
#include "nrg/rng.hpp"

using namespace nrg;

TEST_CASE("pgf closed form at s=0, tau=2.5") {
  // E[e^{-Gamma}] with tail x^{-1/2} integrates to e^{-1} - sqrt(pi) erfc(1)
  const double exact = std::exp(-1.0) - std::sqrt(M_PI) * std::erfc(1.0);
  CHECK(exact == doctest::Approx(0.08907385589078032).epsilon(1e-12));
  CHECK(pi_star_pgf(0.0, 2.5) == doctest::Approx(exact).epsilon(1e-7));
}

TEST_CASE("pgf boundary and shape") {
  for (double tau : {2.2, 2.5, 2.8}) {
    CHECK(pi_star_pgf(1.0, tau) == doctest::Approx(1.0).epsilon(1e-8));
    double prev = pi_star_pgf(0.0, tau);
    CHECK(prev > 0.0);
    double prev_diff = 0.0;
    for (double s = 0.1; s <= 1.0001; s += 0.1) {
      const double cur = pi_star_pgf(s, tau);
      CHECK(cur > prev);  // increasing
      const double diff = cur - prev;
      if (prev_diff > 0.0) CHECK(diff > prev_diff);  // convex
      prev_diff = diff;
      prev = cur;
    }
  }
}

TEST_CASE("pgf against Monte Carlo") {
  Rng rng(2718);
  const int draws = 2000000;
  for (double tau : {2.3, 2.5, 2.7}) {
    for (double s : {0.0, 0.4, 0.8}) {
      double sum = 0.0;
      for (int k = 0; k < draws; ++k) {
        const double gamma = std::pow(rng.uniform_pos(), -1.0 / (tau - 2.0));
        sum += std::exp(-gamma * (1.0 - s));
      }
      const double mc = sum / draws;
      // bounded in [0,1], so s.e. <= 0.5/sqrt(draws)
      CHECK(std::abs(pi_star_pgf(s, tau) - mc) <= 4.0 * 0.5 / std::sqrt(draws));
    }
  }
}

TEST_CASE("extinction probability is the smallest fixed point") {
  const double q = extinction_probability(2.5, 1e-10);
  CHECK(q == doctest::Approx(0.105273).epsilon(2e-4));
  CHECK(pi_star_pgf(q, 2.5) == doctest::Approx(q).epsilon(1e-6));
  // iteration from 0 converges upward, so nothing below q is fixed
  CHECK(pi_star_pgf(0.05, 2.5) > 0.05);

  // supercritical for every tau in (2,3): q < 1
  for (double tau : {2.1, 2.5, 2.9})
    CHECK(extinction_probability(tau, 1e-8) < 1.0);
}

TEST_CASE("giant fraction frozen value and consistency") {
  const auto pred = giant_fraction(2.5, 1e-10);
  CHECK(pred.extinction_prob == doctest::Approx(0.105273).epsilon(2e-4));
  CHECK(pred.giant_fraction == doctest::Approx(0.7797).epsilon(2e-3));
  CHECK(pred.giant_fraction > 0.0);
  CHECK(pred.giant_fraction < 1.0);
  // direct integral of 1 - E[e^{-Lambda(1-q)}] by Monte Carlo
  Rng rng(99);
  const int draws = 2000000;
  double sum = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double lambda = std::pow(rng.uniform_pos(), -1.0 / 1.5);
    sum += std::exp(-lambda * (1.0 - pred.extinction_prob));
  }
  CHECK(pred.giant_fraction ==
        doctest::Approx(1.0 - sum / draws).epsilon(2e-3));
}

TEST_CASE("giant fraction against a simulated two-stage tree") {
  const auto pred = giant_fraction(2.5, 1e-10);
  Rng rng(424242);
  const int trees = 20000;
  int survived = 0;
  for (int t = 0; t < trees; ++t) {
    const double lambda = std::pow(rng.uniform_pos(), -1.0 / 1.5);
    std::int64_t pop = rng.poisson(lambda);
    for (int depth = 0; depth < 50 && pop > 0 && pop <= 10000; ++depth) {
      std::int64_t next = 0;
      for (std::int64_t i = 0; i < pop; ++i) {
        const double g = std::pow(rng.uniform_pos(), -1.0 / 0.5);
        next += rng.poisson(g);
      }
      pop = next;
    }
    if (pop > 0) ++survived;
  }
  const double mc = static_cast<double>(survived) / trees;
  const double se = std::sqrt(pred.giant_fraction *
                              (1.0 - pred.giant_fraction) / trees);
  CHECK(std::abs(mc - pred.giant_fraction) <= 4.0 * se);
}

TEST_CASE("core removed distance scale") {
  CHECK(core_removed_scale(1000000, 2.5) ==
        doctest::Approx(std::log(1e6) / 0.5).epsilon(1e-10));
  CHECK(core_removed_scale(1000000, 2.5) ==
        doctest::Approx(27.631).epsilon(1e-4));
  // matches log n / ((3-tau) ell(n)) once ell leaves its clip
  CHECK(core_removed_scale(1000000000, 2.5) ==
        doctest::Approx(std::log(1e9) /
                        (0.5 * std::pow(std::log(std::log(std::log(1e9))),
                                        0.75)))
            .epsilon(1e-10));
}
