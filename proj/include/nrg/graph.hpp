#ifndef NRG_GRAPH_HPP
#define NRG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nrg/capacity.hpp"

namespace nrg {

struct AdjEntry {
  std::uint32_t neighbor;
  std::uint32_t multiplicity;
};

/// Multigraph in compressed adjacency form. A loop is stored once, as an
/// entry (i,i). Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Builds from an unordered multiset of endpoint pairs (loops allowed,
  // given as (i,i)); duplicates collapse into multiplicities.
  static MultiGraph from_edges(std::uint32_t n,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_total() const { return edge_total_; }

  std::span<const AdjEntry> neighbors(std::uint32_t v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }

  // Sum of incident multiplicities, loops counted twice.
  std::uint64_t degree(std::uint32_t v) const;

  std::uint32_t multiplicity(std::uint32_t u, std::uint32_t v) const;

  // Structural audit: symmetry, multiplicities >= 1, no duplicate
  // neighbor entries, edge_total consistency. Throws on violation.
  void validate() const;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t edge_total_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<AdjEntry> entries_;
};

struct GeneratorOptions {
  std::uint32_t exact_cap = 5000;  // refuse generate_exact above this
  bool override_cap = false;
  double loop_floor = 1e-12;  // skip loop top-up below this mean
};

// Exact pairwise generator: every unordered pair {i,j} (including i=j)
// gets a Poisson(Lambda_i Lambda_j / L_N) multiplicity. O(N^2).
MultiGraph generate_exact(const CapacitySequence& caps, std::uint64_t seed,
                          const GeneratorOptions& opt = {});

// Linear-expected-time generator: Poisson(L_N/2) edges with i.i.d.
// q_N-distributed endpoints, plus a per-vertex Poisson(Lambda_i^2/(2 L_N))
// loop top-up so the loop rate matches the exact generator.
MultiGraph generate_fast(const CapacitySequence& caps, std::uint64_t seed,
                         const GeneratorOptions& opt = {});

// Edge-list persistence: header "NRGRAPH v1 N=<n> tau=<tau> seed=<seed>",
// then "u v m" per adjacent pair with u <= v. Lossless round-trip.
void save_edge_list(const MultiGraph& g, const std::string& path, double tau,
                    std::uint64_t seed);

struct LoadedGraph {
  MultiGraph graph;
  double tau = 0.0;
  std::uint64_t seed = 0;
};

LoadedGraph load_edge_list(const std::string& path);

}  // namespace nrg

#endif
