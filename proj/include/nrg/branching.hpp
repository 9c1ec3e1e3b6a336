#ifndef NRG_BRANCHING_HPP
#define NRG_BRANCHING_HPP

#include <cstdint>
#include <vector>

#include "nrg/alias.hpp"
#include "nrg/capacity.hpp"
#include "nrg/core.hpp"

namespace nrg {

/// Marked branching process: generation sizes, per-individual marks, and
/// genealogy (parent index within the previous generation).
struct MarkedBranchingProcess {
  std::vector<std::vector<std::uint32_t>> marks;    // per generation
  std::vector<std::vector<std::uint32_t>> parents;  // parents[g][i], g >= 1
  bool censored = false;  // population cap hit, process truncated

  std::uint64_t generation_size(std::size_t g) const { return marks[g].size(); }
};

struct BranchingOptions {
  std::uint64_t population_cap = 10000000;
};

// Root mark uniform on {0..N-1}; generation n+1 size is Poisson of the
// summed capacities of generation n's marks, fresh marks i.i.d. q_N.
// Parents are assigned proportionally to parental capacity.
MarkedBranchingProcess simulate_marked_bp(const CapacitySequence& caps,
                                          const SelectionDistribution& sel,
                                          std::uint32_t max_generations,
                                          std::uint64_t seed,
                                          const BranchingOptions& opt = {});

/// Reduced process after pruning repeated marks (with whole subtrees).
struct ReducedProcess {
  std::vector<std::vector<std::uint32_t>> mark_sets;  // surviving marks per generation
};

// Traverse generation by generation, within a generation in emission
// order; delete every individual whose mark was already seen by a
// surviving individual, together with its descendants.
ReducedProcess prune(const MarkedBranchingProcess& process);

struct CoreContact {
  std::uint64_t n_c = 0;      // 1-based index of the first core hit
  std::uint32_t mark = 0;     // the core vertex found
};

// Draws J_1, J_2, ... i.i.d. q_N until a vertex with capacity above
// N^{beta_{k*}} appears.
CoreContact first_core_contact(const CapacitySequence& caps,
                               const CoreParameters& params,
                               const SelectionDistribution& sel,
                               std::uint64_t seed,
                               std::uint64_t draw_cap = 1000000);

struct ConcentrationReport {
  double upper_ratio = 0.0;  // tail capacity sum over its predicted scale
  bool upper_in_band = false;      // membership in (1/4, 4)
};

// Ratio of the aggregated capacity above N^alpha to N^{1-(tau-2)alpha} E[Lambda].
ConcentrationReport concentration_check(const CapacitySequence& caps,
                                        double alpha);

struct BandConcentrationReport {
  double ratio = 0.0;
  bool in_band = false;  // membership in (1/5, 5)
};

// Band variant: aggregated capacity of (N^{alpha0}, N^{alpha1}] over
// N^{1-(tau-2)alpha0} E[Lambda].
BandConcentrationReport band_concentration_check(const CapacitySequence& caps,
                                                 double alpha0, double alpha1);

// Aggregated capacity above N^{b eps} over aggregated capacity above
// N^{eps}; tends to zero for fixed b > 1.
double low_tier_dominance_ratio(const CapacitySequence& caps, double b);

}  // namespace nrg

#endif
