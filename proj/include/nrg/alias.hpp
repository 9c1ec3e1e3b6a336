#ifndef NRG_ALIAS_HPP
#define NRG_ALIAS_HPP

#include <cstdint>
#include <vector>

#include "nrg/capacity.hpp"
#include "nrg/rng.hpp"

namespace nrg {

/// Walker alias table over {0..N-1} with P(j) = Lambda_j / L_N.
/// O(N) build, O(1) draw. Immutable after construction.
class SelectionDistribution {
 public:
  explicit SelectionDistribution(const CapacitySequence& caps);

  std::uint32_t sample(Rng& rng) const;

  std::uint32_t size() const { return static_cast<std::uint32_t>(prob_.size()); }
  double weight(std::uint32_t j) const { return weights_[j]; }

 private:
  std::vector<double> prob_;          // scaled acceptance thresholds
  std::vector<std::uint32_t> alias_;  // overflow targets
  std::vector<double> weights_;       // normalized probabilities
};

}  // namespace nrg

#endif
