#ifndef NRG_CORE_HPP
#define NRG_CORE_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "nrg/capacity.hpp"
#include "nrg/engine.hpp"
#include "nrg/graph.hpp"

namespace nrg {

// All logarithms natural.

// Slowly increasing scale function: max(1, (log log log n)^{3/4}), inner
// iterated logs clipped at the first non-positive value. ell(1) = 1.
double ell(std::uint64_t n);

// ell(n)/log n; requires n >= 2.
double epsilon(std::uint64_t n);

/// Deterministic structural parameters of (N, tau).
struct CoreParameters {
  std::uint64_t n = 0;
  double tau = 0.0;
  double ell = 0.0;
  double epsilon = 0.0;
  std::vector<double> beta;  // beta_0 .. beta_{k_star}
  std::uint32_t k_star = 0;
  std::uint32_t kappa = 0;
  double theta = 0.0;  // (tau-2)(4-tau)/(3-tau)

  double beta_k_star() const { return beta.back(); }
};

// Computes the beta recursion down to k_star, kappa as the geometric mean
// of e^{theta*ell} and k_star, and theta. ell_override, when finite,
// replaces the default ell(n).
CoreParameters core_parameters(std::uint64_t n, double tau,
                               double ell_override =
                                   std::numeric_limits<double>::quiet_NaN());

inline constexpr double kExpInfinity = std::numeric_limits<double>::infinity();

// Vertices with capacity in (N^lo_exp, N^hi_exp]; hi_exp may be infinite.
std::vector<std::uint32_t> tier(const CapacitySequence& caps, double lo_exp,
                                double hi_exp);

struct TierPartition {
  std::vector<std::vector<std::uint32_t>> tiers;  // V_0 .. V_{k_star}
  std::vector<double> boundaries;                 // the beta exponents used
  std::uint32_t i_star = 0;                       // argmax capacity, ties by index
};

// V_0 = {i*}, V_1 = T_{beta_1,inf} \ {i*}, V_k = T_{beta_k,beta_{k-1}}.
TierPartition tier_partition(const CapacitySequence& caps,
                             const CoreParameters& params);

// Predicted hop width of a capacity tier at height N^gamma:
// ceil((1-(tau-1)gamma) / ((3-tau)gamma)).
std::uint32_t tier_width(double gamma, double tau);

struct BackupDepth {
  std::vector<double> gamma;  // gamma_0 .. gamma_{k_bar}
  std::uint32_t k_bar = 0;
};

// gamma_0 = gamma, gamma_1 = gamma - eps, gamma_{k+1} = (tau-2)gamma_k + eps;
// k_bar = min{k >= 1 : gamma_k <= ((4-tau)/(3-tau)) eps}.
BackupDepth backup_depth(std::uint64_t n, double gamma, double tau);

// Upper bound on typical distances after deleting capacities above N^gamma:
// (2/(-log(tau-2))) (loglog n - log(1/gamma)) + tier_width(gamma).
double robust_distance_bound(std::uint64_t n, double gamma, double tau);

// Induced subgraph on {i : Lambda_i <= N^gamma}.
InducedSubgraph delete_above(const MultiGraph& g, const CapacitySequence& caps,
                             double gamma);

struct HeuristicReport {
  bool ok = true;
  std::vector<double> violations;  // gamma values failing the inequality
};

// Verifies tier_width((tau-2)gamma) > tier_width(gamma) + 2 on the grid.
HeuristicReport horizontal_heuristic_check(const std::vector<double>& gamma_grid,
                                           double tau);

}  // namespace nrg

#endif
