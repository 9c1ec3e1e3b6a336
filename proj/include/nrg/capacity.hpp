#ifndef NRG_CAPACITY_HPP
#define NRG_CAPACITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nrg/rng.hpp"

namespace nrg {

/// The i.i.d. Pareto capacities of one graph instance, together with
/// their sum L_N. Immutable after construction.
struct CapacitySequence {
  std::vector<double> values;  // capacities, each >= 1
  double total = 0.0;          // L_N
  double tau = 0.0;            // tail parameter, in (2,3)
  std::uint64_t n = 0;         // vertex count
};

// Inverse of the tail P(Lambda > x) = x^{-(tau-1)}: returns u^{-1/(tau-1)}.
double pareto_quantile(double u, double tau);

// Exact mean (tau-1)/(tau-2) of the capacity law.
double mean_capacity(double tau);

// Tail of the size-biased capacity law: x^{-(tau-2)}.
double size_biased_tail(double x, double tau);

// n i.i.d. capacity draws, deterministic given seed.
CapacitySequence sample_capacities(std::uint64_t n, double tau,
                                   std::uint64_t seed);

// Binary persistence: 16-byte header (magic "NRGC", version, N) followed
// by tau and N little-endian doubles.
void save_capacities(const CapacitySequence& caps, const std::string& path);
CapacitySequence load_capacities(const std::string& path);

// Debug export, one capacity per line.
void export_capacities_text(const CapacitySequence& caps,
                            const std::string& path);

void validate(const CapacitySequence& caps);

}  // namespace nrg

#endif
