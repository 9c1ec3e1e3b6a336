#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrg/branching.hpp"
#include "nrg/capacity.hpp"
#include "nrg/core.hpp"
#include "nrg/engine.hpp"
#include "nrg/graph.hpp"
#include "nrg/stats.hpp"

using namespace nrg;

TEST_CASE("simulation is deterministic and well-formed") {
  const auto caps = sample_capacities(500, 2.5, 4);
  SelectionDistribution sel(caps);
  const auto a = simulate_marked_bp(caps, sel, 6, 11);
  const auto b = simulate_marked_bp(caps, sel, 6, 11);
  CHECK(a.marks == b.marks);
  CHECK(a.parents == b.parents);
  const auto c = simulate_marked_bp(caps, sel, 6, 12);
  CHECK(a.marks != c.marks);

  REQUIRE(!a.marks.empty());
  CHECK(a.marks[0].size() == 1);
  CHECK(a.marks.size() <= 7);  // root plus at most max_generations
  REQUIRE(a.parents.size() == a.marks.size());
  CHECK(a.parents[0].empty());
  for (std::size_t g = 1; g < a.marks.size(); ++g) {
    REQUIRE(a.parents[g].size() == a.marks[g].size());
    for (auto p : a.parents[g]) CHECK(p < a.marks[g - 1].size());
    for (auto m : a.marks[g]) CHECK(m < caps.n);
  }
}

TEST_CASE("first generation size is Poisson of the root capacity") {
  const auto caps = sample_capacities(200, 2.5, 9);
  SelectionDistribution sel(caps);
  const int reps = 40000;
  double observed = 0.0, expected = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto bp = simulate_marked_bp(caps, sel, 1,
                                       static_cast<std::uint64_t>(r));
    expected += caps.values[bp.marks[0][0]];
    if (bp.marks.size() > 1)
      observed += static_cast<double>(bp.marks[1].size());
  }
  // conditionally Poisson, so the empirical means must agree closely
  const double se = std::sqrt(expected) / reps;
  CHECK(std::abs(observed / reps - expected / reps) <= 4.0 * se * reps / reps);
  CHECK(observed / expected == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("fresh marks follow the size-biased law") {
  const auto caps = sample_capacities(50, 2.5, 13);
  SelectionDistribution sel(caps);
  std::uint32_t heavy = 0;
  for (std::uint32_t i = 1; i < caps.n; ++i)
    if (caps.values[i] > caps.values[heavy]) heavy = i;
  const double p = caps.values[heavy] / caps.total;
  std::uint64_t hits = 0, draws = 0;
  for (int r = 0; r < 20000; ++r) {
    const auto bp = simulate_marked_bp(caps, sel, 3,
                                       static_cast<std::uint64_t>(r));
    for (std::size_t g = 1; g < bp.marks.size(); ++g)
      for (auto m : bp.marks[g]) {
        ++draws;
        if (m == heavy) ++hits;
      }
  }
  REQUIRE(draws > 10000);
  const double freq = static_cast<double>(hits) / static_cast<double>(draws);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
  CHECK(std::abs(freq - p) <= 4.0 * se);
}

TEST_CASE("population cap censors the process") {
  const auto caps = sample_capacities(100000, 2.2, 1);
  SelectionDistribution sel(caps);
  BranchingOptions opt;
  opt.population_cap = 50;
  bool censored = false;
  for (int r = 0; r < 200 && !censored; ++r)
    censored = simulate_marked_bp(caps, sel, 20,
                                  static_cast<std::uint64_t>(r), opt)
                   .censored;
  CHECK(censored);
}

TEST_CASE("pruning a hand-built genealogy") {
  MarkedBranchingProcess bp;
  bp.marks = {{5}, {3, 5, 7}, {1, 3, 9, 2}};
  bp.parents = {{}, {0, 0, 0}, {0, 1, 1, 2}};
  const auto red = prune(bp);
  REQUIRE(red.mark_sets.size() == 3);
  CHECK(red.mark_sets[0] == std::vector<std::uint32_t>{5});
  // mark 5 repeats the root, so that individual and its subtree go
  CHECK(red.mark_sets[1] == std::vector<std::uint32_t>{3, 7});
  // children of the pruned individual die; mark 3 repeats a survivor
  CHECK(red.mark_sets[2] == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("pruning resolves within-generation duplicates in emission order") {
  MarkedBranchingProcess bp;
  bp.marks = {{0}, {4, 4, 2}, {4, 6}};
  bp.parents = {{}, {0, 0, 0}, {1, 2}};
  const auto red = prune(bp);
  CHECK(red.mark_sets[1] == std::vector<std::uint32_t>{4, 2});
  // generation 2: parent 1 was pruned; mark 4 also repeats anyway
  CHECK(red.mark_sets[2] == std::vector<std::uint32_t>{6});
}

TEST_CASE("pruning drops trailing empty generations") {
  MarkedBranchingProcess bp;
  bp.marks = {{0}, {0}};
  bp.parents = {{}, {0}};
  const auto red = prune(bp);
  CHECK(red.mark_sets.size() == 1);
}

TEST_CASE("pruned process never repeats a mark") {
  const auto caps = sample_capacities(100, 2.4, 6);
  SelectionDistribution sel(caps);
  for (int r = 0; r < 500; ++r) {
    const auto red =
        prune(simulate_marked_bp(caps, sel, 5, static_cast<std::uint64_t>(r)));
    std::vector<std::uint32_t> seen;
    for (const auto& gen : red.mark_sets)
      for (auto m : gen) {
        CHECK(std::find(seen.begin(), seen.end(), m) == seen.end());
        seen.push_back(m);
      }
  }
}

TEST_CASE("shell sizes of the graph couple to the pruned process") {
  const auto caps = sample_capacities(1000, 2.5, 5);
  SelectionDistribution sel(caps);
  const int reps = 3000;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> graph_side, bp_side;
  Rng root_rng(derive_seed(5, {99}));
  for (int r = 0; r < reps; ++r) {
    const auto g = generate_fast(caps, static_cast<std::uint64_t>(r));
    const auto i0 = static_cast<std::uint32_t>(root_rng.below(caps.n));
    const auto sh = neighborhood_shells(g, i0, 2);
    graph_side.push_back(
        {sh.shells.size() > 1 ? static_cast<std::uint32_t>(sh.shells[1].size())
                              : 0,
         sh.shells.size() > 2 ? static_cast<std::uint32_t>(sh.shells[2].size())
                              : 0});
    const auto red = prune(simulate_marked_bp(
        caps, sel, 2, derive_seed(7, {static_cast<std::uint64_t>(r)})));
    bp_side.push_back(
        {red.mark_sets.size() > 1
             ? static_cast<std::uint32_t>(red.mark_sets[1].size())
             : 0,
         red.mark_sets.size() > 2
             ? static_cast<std::uint32_t>(red.mark_sets[2].size())
             : 0});
  }
  const auto edges = geometric_bin_edges();
  const double tv = total_variation(joint_histogram(graph_side, edges),
                                    joint_histogram(bp_side, edges));
  CHECK(tv < 0.12);
}

TEST_CASE("first core contact") {
  const auto caps = sample_capacities(100000, 2.5, 15);
  const auto params = core_parameters(caps.n, caps.tau);
  SelectionDistribution sel(caps);
  const double cut = std::exp(params.beta_k_star() *
                              std::log(static_cast<double>(caps.n)));
  double core_mass = 0.0;
  for (double v : caps.values)
    if (v > cut) core_mass += v;
  REQUIRE(core_mass > 0.0);
  const double p = core_mass / caps.total;
  const int reps = 2000;
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto hit =
        first_core_contact(caps, params, sel, static_cast<std::uint64_t>(r));
    CHECK(hit.n_c >= 1);
    CHECK(caps.values[hit.mark] > cut);
    sum += static_cast<double>(hit.n_c);
  }
  // geometric waiting time with success probability p
  const double mean = 1.0 / p;
  const double se = std::sqrt((1.0 - p) / (p * p) / reps);
  CHECK(std::abs(sum / reps - mean) <= 4.0 * se);
}

TEST_CASE("tail capacity concentrates at its predicted scale") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    const auto caps = sample_capacities(100000, 2.5, seed);
    const auto rep = concentration_check(caps, 0.3);
    CHECK(rep.upper_in_band);
    CHECK(rep.upper_ratio > 0.25);
    CHECK(rep.upper_ratio < 4.0);
    const auto band = band_concentration_check(caps, 0.2, 0.4);
    CHECK(band.in_band);
  }
}

TEST_CASE("low tiers dominate") {
  // with ell clipped at 1 for desk-scale N the thresholds sit at e^1 and
  // e^b, so the ratio hovers near e^{-(tau-2)(b-1)} rather than decaying
  // in N; it must stay below 1/2 and fall as b grows
  for (std::uint64_t n : {10000ULL, 1000000ULL}) {
    const auto caps = sample_capacities(n, 2.5, 8);
    const double r3 = low_tier_dominance_ratio(caps, 3.0);
    const double r5 = low_tier_dominance_ratio(caps, 5.0);
    CHECK(r3 > 0.15);
    CHECK(r3 < 0.5);
    CHECK(r5 < r3);
  }
}
