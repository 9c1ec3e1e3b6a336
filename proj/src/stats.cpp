#include "nrg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace nrg {

ChiSquareResult chi_square_two_sample(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      std::uint32_t min_pooled) {
  if (a.empty() || a.size() != b.size())
    throw std::invalid_argument("samples must be nonempty and of equal size");
  std::map<std::int64_t, std::pair<std::uint64_t, std::uint64_t>> counts;
  for (auto v : a) counts[v].first++;
  for (auto v : b) counts[v].second++;

  // merge adjacent value bins until each pooled bin is large enough
  std::vector<std::pair<double, double>> bins;
  double ca = 0.0, cb = 0.0;
  for (const auto& [value, c] : counts) {
    ca += static_cast<double>(c.first);
    cb += static_cast<double>(c.second);
    if (ca + cb >= min_pooled) {
      bins.emplace_back(ca, cb);
      ca = cb = 0.0;
    }
  }
  if (ca + cb > 0.0) {
    if (bins.empty())
      bins.emplace_back(ca, cb);
    else {
      bins.back().first += ca;
      bins.back().second += cb;
    }
  }

  ChiSquareResult res;
  if (bins.size() < 2) {
    res.dof = 0;
    res.p_value = 1.0;
    return res;
  }
  // equal sample sizes: X^2 = sum (O_a - O_b)^2 / (O_a + O_b)
  for (const auto& [oa, ob] : bins)
    res.statistic += (oa - ob) * (oa - ob) / (oa + ob);
  res.dof = static_cast<std::uint32_t>(bins.size() - 1);
  boost::math::chi_squared dist(res.dof);
  res.p_value = boost::math::cdf(boost::math::complement(dist, res.statistic));
  return res;
}

std::vector<std::uint32_t> geometric_bin_edges(std::uint32_t cap) {
  std::vector<std::uint32_t> edges;
  std::uint32_t e = 0;
  while (e < cap) {
    edges.push_back(e);
    const std::uint32_t step = e < 5 ? 1 : std::max<std::uint32_t>(1, e / 3);
    e += step;
  }
  edges.push_back(cap);
  return edges;
}

namespace {

std::size_t bin_of(std::uint32_t v, const std::vector<std::uint32_t>& edges) {
  // edges are upper-inclusive boundaries of successive bins; overflow pools
  // into the last bin
  const auto it = std::lower_bound(edges.begin(), edges.end(), v);
  if (it == edges.end()) return edges.size();
  return static_cast<std::size_t>(it - edges.begin());
}

}  // namespace

std::vector<double> joint_histogram(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& samples,
    const std::vector<std::uint32_t>& edges) {
  const std::size_t k = edges.size() + 1;
  std::vector<double> hist(k * k, 0.0);
  for (const auto& [x, y] : samples)
    hist[bin_of(x, edges) * k + bin_of(y, edges)] += 1.0;
  const double total = static_cast<double>(samples.size());
  for (double& h : hist) h /= total;
  return hist;
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("histogram size mismatch");
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return 0.5 * tv;
}

}  // namespace nrg
