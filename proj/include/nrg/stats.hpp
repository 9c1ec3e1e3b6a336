#ifndef NRG_STATS_HPP
#define NRG_STATS_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace nrg {

struct ChiSquareResult {
  double statistic = 0.0;
  std::uint32_t dof = 0;
  double p_value = 1.0;
};

// Two-sample chi-square homogeneity test on integer-valued samples of
// equal size. Values are binned at integer resolution; adjacent bins are
// merged until every pooled bin holds at least min_pooled observations.
ChiSquareResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      std::uint32_t min_pooled = 10);

// Geometric bin edges used for joint shell-size histograms: integer bins
// up to 5, then ~4/3 growth, truncated at `cap` with overflow pooled.
std::vector<std::uint32_t> geometric_bin_edges(std::uint32_t cap = 200);

// Joint histogram of (first, second) pairs over the geometric bins,
// normalized to a probability vector.
std::vector<double> joint_histogram(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& samples,
    const std::vector<std::uint32_t>& edges);

// Total variation distance between two normalized histograms.
double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q);

}  // namespace nrg

#endif
