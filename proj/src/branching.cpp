#include "nrg/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrg {

MarkedBranchingProcess simulate_marked_bp(const CapacitySequence& caps,
                                          const SelectionDistribution& sel,
                                          std::uint32_t max_generations,
                                          std::uint64_t seed,
                                          const BranchingOptions& opt) {
  if (max_generations < 1)
    throw std::invalid_argument("max_generations must be >= 1");
  Rng rng(derive_seed(seed, {stream_tag::branching}));
  MarkedBranchingProcess bp;
  bp.marks.push_back({static_cast<std::uint32_t>(rng.below(caps.n))});
  bp.parents.push_back({});
  std::uint64_t population = 1;

  for (std::uint32_t g = 0; g < max_generations; ++g) {
    const auto& gen = bp.marks[g];
    if (gen.empty()) break;
    // cumulative parental capacities, for size draw and parent attribution
    std::vector<double> cum(gen.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      sum += caps.values[gen[i]];
      cum[i] = sum;
    }
    const std::int64_t size = rng.poisson(sum);
    if (population + static_cast<std::uint64_t>(size) > opt.population_cap) {
      bp.censored = true;
      break;
    }
    population += static_cast<std::uint64_t>(size);
    std::vector<std::uint32_t> marks(static_cast<std::size_t>(size));
    std::vector<std::uint32_t> parents(static_cast<std::size_t>(size));
    for (std::int64_t i = 0; i < size; ++i) {
      marks[static_cast<std::size_t>(i)] = sel.sample(rng);
      const double u = rng.uniform() * sum;
      const auto it = std::lower_bound(cum.begin(), cum.end(), u);
      parents[static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(it - cum.begin());
    }
    bp.marks.push_back(std::move(marks));
    bp.parents.push_back(std::move(parents));
  }
  return bp;
}

ReducedProcess prune(const MarkedBranchingProcess& process) {
  ReducedProcess out;
  std::vector<bool> seen;
  std::vector<std::uint32_t> touched;
  std::vector<std::vector<bool>> alive(process.marks.size());

  auto mark_seen = [&](std::uint32_t m) {
    if (m >= seen.size()) seen.resize(m + 1, false);
    seen[m] = true;
    touched.push_back(m);
  };

  for (std::size_t g = 0; g < process.marks.size(); ++g) {
    const auto& gen = process.marks[g];
    alive[g].assign(gen.size(), false);
    std::vector<std::uint32_t> survivors;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      if (g > 0) {
        const std::uint32_t parent = process.parents[g][i];
        if (!alive[g - 1][parent]) continue;  // descendant of a pruned one
      }
      const std::uint32_t m = gen[i];
      if (m < seen.size() && seen[m]) continue;  // repeated mark
      alive[g][i] = true;
      mark_seen(m);
      survivors.push_back(m);
    }
    out.mark_sets.push_back(std::move(survivors));
    if (out.mark_sets.back().empty() && g + 1 < process.marks.size()) {
      // nothing alive below this point
      break;
    }
  }
  while (!out.mark_sets.empty() && out.mark_sets.back().empty())
    out.mark_sets.pop_back();
  return out;
}

CoreContact first_core_contact(const CapacitySequence& caps,
                               const CoreParameters& params,
                               const SelectionDistribution& sel,
                               std::uint64_t seed, std::uint64_t draw_cap) {
  const double cutoff = std::exp(params.beta_k_star() *
                                 std::log(static_cast<double>(caps.n)));
  bool core_nonempty = false;
  for (double v : caps.values)
    if (v > cutoff) {
      core_nonempty = true;
      break;
    }
  if (!core_nonempty) throw std::invalid_argument("core is empty");
  Rng rng(derive_seed(seed, {stream_tag::selection}));
  for (std::uint64_t k = 1; k <= draw_cap; ++k) {
    const std::uint32_t j = sel.sample(rng);
    if (caps.values[j] > cutoff) return {k, j};
  }
  throw std::runtime_error("first_core_contact: draw cap exceeded");
}

ConcentrationReport concentration_check(const CapacitySequence& caps,
                                        double alpha) {
  const double tau = caps.tau;
  if (!(alpha > 0.0 && alpha < 1.0 / (tau - 1.0)))
    throw std::invalid_argument("alpha must lie in (0, 1/(tau-1))");
  const double logn = std::log(static_cast<double>(caps.n));
  const double cutoff = std::exp(alpha * logn);
  double sum = 0.0;
  for (double v : caps.values)
    if (v > cutoff) sum += v;
  const double scale = std::exp((1.0 - (tau - 2.0) * alpha) * logn) *
                       mean_capacity(tau);
  ConcentrationReport report;
  report.upper_ratio = sum / scale;
  report.upper_in_band = report.upper_ratio > 0.25 && report.upper_ratio < 4.0;
  return report;
}

BandConcentrationReport band_concentration_check(const CapacitySequence& caps,
                                                 double alpha0, double alpha1) {
  const double tau = caps.tau;
  if (!(alpha0 > 0.0 && alpha0 < alpha1 && alpha1 < 1.0 / (tau - 1.0)))
    throw std::invalid_argument("need 0 < alpha0 < alpha1 < 1/(tau-1)");
  const double logn = std::log(static_cast<double>(caps.n));
  const double lo = std::exp(alpha0 * logn);
  const double hi = std::exp(alpha1 * logn);
  double sum = 0.0;
  for (double v : caps.values)
    if (v > lo && v <= hi) sum += v;
  const double scale = std::exp((1.0 - (tau - 2.0) * alpha0) * logn) *
                       mean_capacity(tau);
  BandConcentrationReport report;
  report.ratio = sum / scale;
  report.in_band = report.ratio > 0.2 && report.ratio < 5.0;
  return report;
}

double low_tier_dominance_ratio(const CapacitySequence& caps, double b) {
  if (!(b > 1.0)) throw std::invalid_argument("b must exceed 1");
  const double eps = epsilon(caps.n);
  const double logn = std::log(static_cast<double>(caps.n));
  const double lo = std::exp(eps * logn);
  const double hi = std::exp(b * eps * logn);
  double above_eps = 0.0, above_beps = 0.0;
  for (double v : caps.values) {
    if (v > lo) above_eps += v;
    if (v > hi) above_beps += v;
  }
  if (above_eps == 0.0) return 0.0;
  return above_beps / above_eps;
}

}  // namespace nrg
