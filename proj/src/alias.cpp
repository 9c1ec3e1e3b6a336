#include "nrg/alias.hpp"

#include <cmath>
#include <stdexcept>

namespace nrg {

SelectionDistribution::SelectionDistribution(const CapacitySequence& caps) {
  const std::size_t n = caps.values.size();
  if (n == 0) throw std::invalid_argument("empty capacity sequence");
  weights_.resize(n);
  double sum = 0.0;
  for (double v : caps.values) sum += v;
  for (std::size_t i = 0; i < n; ++i) weights_[i] = caps.values[i] / sum;

  prob_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<std::uint32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights_[i] * static_cast<double>(n);
    if (scaled[i] < 1.0)
      small.push_back(static_cast<std::uint32_t>(i));
    else
      large.push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    const std::uint32_t l = large.back();
    small.pop_back();
    large.pop_back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0)
      small.push_back(l);
    else
      large.push_back(l);
  }
  for (std::uint32_t i : large) prob_[i] = 1.0;
  for (std::uint32_t i : small) prob_[i] = 1.0;  // numerical leftovers
}

std::uint32_t SelectionDistribution::sample(Rng& rng) const {
  const std::uint32_t n = size();
  const std::uint32_t idx = static_cast<std::uint32_t>(rng.below(n));
  const double u = rng.uniform();
  return u < prob_[idx] ? idx : alias_[idx];
}

}  // namespace nrg
