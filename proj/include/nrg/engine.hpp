#ifndef NRG_ENGINE_HPP
#define NRG_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "nrg/graph.hpp"
#include "nrg/rng.hpp"

namespace nrg {

inline constexpr std::int32_t kUnreachable = -1;

struct ComponentLabeling {
  std::vector<std::uint32_t> label;  // per-vertex component id
  std::vector<std::uint64_t> sizes;  // per-component vertex count
  std::uint32_t giant_id = 0;        // largest component, ties by smallest id

  std::uint64_t giant_size() const {
    return sizes.empty() ? 0 : sizes[giant_id];
  }
};

// Deterministic BFS labeling in discovery order from vertex 0 upward.
// Multiplicities and loops are ignored for connectivity.
ComponentLabeling connected_components(const MultiGraph& g);

// Exact hop distances from source; unreachable vertices get kUnreachable.
std::vector<std::int32_t> bfs_distances(const MultiGraph& g,
                                        std::uint32_t source);

// Hop distance between a single pair, with early exit. kUnreachable if
// disconnected.
std::int32_t bfs_distance(const MultiGraph& g, std::uint32_t source,
                          std::uint32_t target);

// pair_count ordered pairs of distinct giant-component vertices, sampled
// uniformly with replacement; exact BFS distance for each.
std::vector<std::int32_t> sample_giant_distances(const MultiGraph& g,
                                                 const ComponentLabeling& labeling,
                                                 std::uint64_t pair_count,
                                                 std::uint64_t seed);

struct ShellSequence {
  std::vector<std::vector<std::uint32_t>> shells;  // N_0, N_1, ...
};

// Neighborhood shells N_0 = {i0}, N_{k+1} = fresh neighbors of N_k;
// stops at max_depth or at the first empty shell.
ShellSequence neighborhood_shells(const MultiGraph& g, std::uint32_t i0,
                                  std::uint32_t max_depth);

struct InducedSubgraph {
  MultiGraph graph;
  std::vector<std::uint32_t> old_ids;  // new id -> old id
};

// Induced subgraph on `keep` (old vertex ids, need not be sorted); ids are
// remapped densely in ascending old-id order.
InducedSubgraph induced_subgraph(const MultiGraph& g,
                                 const std::vector<std::uint32_t>& keep);

// Max eccentricity within the largest component (all-sources BFS).
// Refuses graphs above vertex_cap.
std::uint32_t exact_component_diameter(const MultiGraph& g,
                                       std::uint32_t vertex_cap = 100000);

}  // namespace nrg

#endif
