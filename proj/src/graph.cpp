#include "nrg/graph.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nrg/alias.hpp"

namespace nrg {

MultiGraph MultiGraph::from_edges(
    std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  MultiGraph g;
  g.n_ = n;
  g.edge_total_ = edges.size();
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());

  // collapse duplicates into (u,v,mult)
  struct Triple {
    std::uint32_t u, v, m;
  };
  std::vector<Triple> collapsed;
  collapsed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    collapsed.push_back({edges[i].first, edges[i].second,
                         static_cast<std::uint32_t>(j - i)});
    i = j;
  }

  std::vector<std::uint64_t> deg(n + 1, 0);
  for (const auto& t : collapsed) {
    ++deg[t.u];
    if (t.u != t.v) ++deg[t.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.entries_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& t : collapsed) {
    g.entries_[cursor[t.u]++] = {t.v, t.m};
    if (t.u != t.v) g.entries_[cursor[t.v]++] = {t.u, t.m};
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    std::sort(g.entries_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.entries_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const AdjEntry& a, const AdjEntry& b) {
                return a.neighbor < b.neighbor;
              });
  }
  return g;
}

std::uint64_t MultiGraph::degree(std::uint32_t v) const {
  if (v >= n_) throw std::out_of_range("vertex out of range");
  std::uint64_t d = 0;
  for (const auto& e : neighbors(v))
    d += (e.neighbor == v) ? 2ULL * e.multiplicity : e.multiplicity;
  return d;
}

std::uint32_t MultiGraph::multiplicity(std::uint32_t u, std::uint32_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  auto span = neighbors(u);
  auto it = std::lower_bound(span.begin(), span.end(), v,
                             [](const AdjEntry& e, std::uint32_t x) {
                               return e.neighbor < x;
                             });
  return (it != span.end() && it->neighbor == v) ? it->multiplicity : 0;
}

void MultiGraph::validate() const {
  std::uint64_t half_sum = 0;
  std::uint64_t loop_sum = 0;
  for (std::uint32_t v = 0; v < n_; ++v) {
    auto span = neighbors(v);
    for (std::size_t i = 0; i < span.size(); ++i) {
      const auto& e = span[i];
      if (e.multiplicity < 1) throw std::runtime_error("zero multiplicity");
      if (i > 0 && span[i - 1].neighbor >= e.neighbor)
        throw std::runtime_error("duplicate or unsorted neighbor entry");
      if (e.neighbor == v) {
        loop_sum += e.multiplicity;
      } else {
        if (multiplicity(e.neighbor, v) != e.multiplicity)
          throw std::runtime_error("asymmetric adjacency");
        half_sum += e.multiplicity;
      }
    }
  }
  if (half_sum % 2 != 0) throw std::runtime_error("odd cross-edge sum");
  if (half_sum / 2 + loop_sum != edge_total_)
    throw std::runtime_error("edge_total inconsistent with adjacency");
}

MultiGraph generate_exact(const CapacitySequence& caps, std::uint64_t seed,
                          const GeneratorOptions& opt) {
  validate(caps);
  const std::uint32_t n = static_cast<std::uint32_t>(caps.n);
  if (n > opt.exact_cap && !opt.override_cap)
    throw std::invalid_argument("generate_exact: N above configured cap");
  Rng rng(derive_seed(seed, {stream_tag::edges}));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const double mean = caps.values[i] * caps.values[j] / caps.total;
      const std::int64_t m = rng.poisson(mean);
      for (std::int64_t k = 0; k < m; ++k) edges.emplace_back(i, j);
    }
  }
  return MultiGraph::from_edges(n, std::move(edges));
}

MultiGraph generate_fast(const CapacitySequence& caps, std::uint64_t seed,
                         const GeneratorOptions& opt) {
  validate(caps);
  const std::uint32_t n = static_cast<std::uint32_t>(caps.n);
  Rng rng(derive_seed(seed, {stream_tag::edges}));
  SelectionDistribution sel(caps);
  const std::int64_t m = rng.poisson(caps.total / 2.0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    const std::uint32_t a = sel.sample(rng);
    const std::uint32_t b = sel.sample(rng);
    edges.emplace_back(a, b);
  }
  // loop-rate top-up: endpoint pairs produce loops at half the exact rate
  for (std::uint32_t i = 0; i < n; ++i) {
    const double mean = caps.values[i] * caps.values[i] / (2.0 * caps.total);
    if (mean < opt.loop_floor) continue;
    const std::int64_t loops = rng.poisson(mean);
    for (std::int64_t k = 0; k < loops; ++k) edges.emplace_back(i, i);
  }
  return MultiGraph::from_edges(n, std::move(edges));
}

void save_edge_list(const MultiGraph& g, const std::string& path, double tau,
                    std::uint64_t seed) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  char header[128];
  std::snprintf(header, sizeof(header), "NRGRAPH v1 N=%u tau=%.17g seed=%" PRIu64,
                g.vertex_count(), tau, seed);
  out << header << '\n';
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (const auto& e : g.neighbors(u))
      if (e.neighbor >= u)
        out << u << ' ' << e.neighbor << ' ' << e.multiplicity << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

LoadedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
  LoadedGraph out;
  std::uint32_t n = 0;
  if (std::sscanf(line.c_str(), "NRGRAPH v1 N=%u tau=%lg seed=%" SCNu64, &n,
                  &out.tau, &out.seed) != 3)
    throw std::runtime_error("bad edge-list header: " + path);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t u, v, m;
  while (in >> u >> v >> m) {
    if (u > v) throw std::runtime_error("edge-list row with u > v");
    for (std::uint32_t k = 0; k < m; ++k) edges.emplace_back(u, v);
  }
  out.graph = MultiGraph::from_edges(n, std::move(edges));
  return out;
}

}  // namespace nrg
