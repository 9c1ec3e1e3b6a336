#include "nrg/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrg {

namespace {

void check_tau(double tau) {
  if (!(tau > 2.0 && tau < 3.0))
    throw std::invalid_argument("tau must lie in (2,3)");
}

}  // namespace

double ell(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double l1 = std::log(static_cast<double>(n));
  if (l1 <= 1.0) return 1.0;
  const double l2 = std::log(l1);
  if (l2 <= 1.0) return 1.0;
  const double l3 = std::log(l2);
  if (l3 <= 1.0) return 1.0;
  return std::pow(l3, 0.75);
}

double epsilon(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return ell(n) / std::log(static_cast<double>(n));
}

CoreParameters core_parameters(std::uint64_t n, double tau,
                               double ell_override) {
  check_tau(tau);
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  CoreParameters p;
  p.n = n;
  p.tau = tau;
  p.ell = std::isnan(ell_override) ? ell(n) : ell_override;
  if (!(p.ell > 0.0)) throw std::invalid_argument("ell must be positive");
  const double logn = std::log(static_cast<double>(n));
  p.epsilon = p.ell / logn;
  p.theta = (tau - 2.0) * (4.0 - tau) / (3.0 - tau);
  p.k_star = static_cast<std::uint32_t>(
      std::ceil(std::log(logn) / (-std::log(tau - 2.0))));
  p.beta.resize(p.k_star + 1);
  p.beta[0] = 1.0 / (tau - 1.0) + p.epsilon / (tau - 2.0);
  for (std::uint32_t j = 1; j <= p.k_star; ++j)
    p.beta[j] = (tau - 2.0) * p.beta[j - 1] + p.epsilon;
  p.kappa = static_cast<std::uint32_t>(std::ceil(
      std::sqrt(std::exp(p.theta * p.ell) * static_cast<double>(p.k_star))));
  return p;
}

std::vector<std::uint32_t> tier(const CapacitySequence& caps, double lo_exp,
                                double hi_exp) {
  if (!(lo_exp < hi_exp))
    throw std::invalid_argument("tier requires lo_exp < hi_exp");
  const double logn = std::log(static_cast<double>(caps.n));
  const double lo = std::exp(lo_exp * logn);
  const double hi = std::isinf(hi_exp)
                        ? std::numeric_limits<double>::infinity()
                        : std::exp(hi_exp * logn);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < caps.n; ++i)
    if (caps.values[i] > lo && caps.values[i] <= hi) out.push_back(i);
  return out;
}

TierPartition tier_partition(const CapacitySequence& caps,
                             const CoreParameters& params) {
  if (caps.n == 0) throw std::invalid_argument("empty capacity sequence");
  TierPartition part;
  part.boundaries = params.beta;
  part.i_star = 0;
  for (std::uint32_t i = 1; i < caps.n; ++i)
    if (caps.values[i] > caps.values[part.i_star]) part.i_star = i;
  part.tiers.resize(params.k_star + 1);
  part.tiers[0] = {part.i_star};
  if (params.k_star >= 1) {
    auto v1 = tier(caps, params.beta[1], kExpInfinity);
    v1.erase(std::remove(v1.begin(), v1.end(), part.i_star), v1.end());
    part.tiers[1] = std::move(v1);
  }
  for (std::uint32_t k = 2; k <= params.k_star; ++k)
    part.tiers[k] = tier(caps, params.beta[k], params.beta[k - 1]);
  return part;
}

std::uint32_t tier_width(double gamma, double tau) {
  check_tau(tau);
  if (!(gamma > 0.0 && gamma < 0.5))
    throw std::invalid_argument("gamma must lie in (0, 1/2)");
  return static_cast<std::uint32_t>(
      std::ceil((1.0 - (tau - 1.0) * gamma) / ((3.0 - tau) * gamma)));
}

BackupDepth backup_depth(std::uint64_t n, double gamma, double tau) {
  check_tau(tau);
  const double eps = epsilon(n);
  if (!(gamma > eps && gamma < 0.5))
    throw std::invalid_argument("gamma must lie in (epsilon(n), 1/2)");
  const double floor = (4.0 - tau) / (3.0 - tau) * eps;
  BackupDepth out;
  out.gamma.push_back(gamma);
  out.gamma.push_back(gamma - eps);
  std::uint32_t k = 1;
  while (out.gamma.back() > floor) {
    out.gamma.push_back((tau - 2.0) * out.gamma.back() + eps);
    ++k;
  }
  out.k_bar = k;
  return out;
}

double robust_distance_bound(std::uint64_t n, double gamma, double tau) {
  check_tau(tau);
  const double eps = epsilon(n);
  if (!(gamma > eps && gamma < 0.5))
    throw std::invalid_argument("gamma must lie in (epsilon(n), 1/2)");
  const double loglogn = std::log(std::log(static_cast<double>(n)));
  return 2.0 / (-std::log(tau - 2.0)) * (loglogn - std::log(1.0 / gamma)) +
         static_cast<double>(tier_width(gamma, tau));
}

InducedSubgraph delete_above(const MultiGraph& g, const CapacitySequence& caps,
                             double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const double cutoff =
      std::exp(gamma * std::log(static_cast<double>(caps.n)));
  std::vector<std::uint32_t> keep;
  for (std::uint32_t i = 0; i < caps.n; ++i)
    if (caps.values[i] <= cutoff) keep.push_back(i);
  return induced_subgraph(g, keep);
}

HeuristicReport horizontal_heuristic_check(const std::vector<double>& gamma_grid,
                                           double tau) {
  check_tau(tau);
  HeuristicReport report;
  for (double gamma : gamma_grid) {
    const double lower = (tau - 2.0) * gamma;
    if (!(gamma > 0.0 && gamma < 0.5 && lower > 0.0 && lower < 0.5))
      throw std::invalid_argument("grid point outside (0, 1/2)");
    if (!(tier_width(lower, tau) > tier_width(gamma, tau) + 2)) {
      report.ok = false;
      report.violations.push_back(gamma);
    }
  }
  return report;
}

}  // namespace nrg
