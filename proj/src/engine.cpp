#include "nrg/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace nrg {

ComponentLabeling connected_components(const MultiGraph& g) {
  const std::uint32_t n = g.vertex_count();
  ComponentLabeling out;
  out.label.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (out.label[start] != UINT32_MAX) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(out.sizes.size());
    std::uint64_t size = 0;
    queue.clear();
    queue.push_back(start);
    out.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t v = queue[head];
      ++size;
      for (const auto& e : g.neighbors(v)) {
        if (out.label[e.neighbor] == UINT32_MAX) {
          out.label[e.neighbor] = id;
          queue.push_back(e.neighbor);
        }
      }
    }
    out.sizes.push_back(size);
  }
  out.giant_id = 0;
  for (std::uint32_t id = 1; id < out.sizes.size(); ++id)
    if (out.sizes[id] > out.sizes[out.giant_id]) out.giant_id = id;
  return out;
}

std::vector<std::int32_t> bfs_distances(const MultiGraph& g,
                                        std::uint32_t source) {
  const std::uint32_t n = g.vertex_count();
  if (source >= n) throw std::out_of_range("source out of range");
  std::vector<std::int32_t> dist(n, kUnreachable);
  std::vector<std::uint32_t> frontier{source}, next;
  dist[source] = 0;
  std::int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (std::uint32_t v : frontier) {
      for (const auto& e : g.neighbors(v)) {
        if (dist[e.neighbor] == kUnreachable) {
          dist[e.neighbor] = d;
          next.push_back(e.neighbor);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::int32_t bfs_distance(const MultiGraph& g, std::uint32_t source,
                          std::uint32_t target) {
  const std::uint32_t n = g.vertex_count();
  if (source >= n || target >= n) throw std::out_of_range("vertex out of range");
  if (source == target) return 0;
  std::vector<std::int32_t> dist(n, kUnreachable);
  std::vector<std::uint32_t> frontier{source}, next;
  dist[source] = 0;
  std::int32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (std::uint32_t v : frontier) {
      for (const auto& e : g.neighbors(v)) {
        if (dist[e.neighbor] == kUnreachable) {
          if (e.neighbor == target) return d;
          dist[e.neighbor] = d;
          next.push_back(e.neighbor);
        }
      }
    }
    frontier.swap(next);
  }
  return kUnreachable;
}

std::vector<std::int32_t> sample_giant_distances(const MultiGraph& g,
                                                 const ComponentLabeling& labeling,
                                                 std::uint64_t pair_count,
                                                 std::uint64_t seed) {
  std::vector<std::uint32_t> giant;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (labeling.label[v] == labeling.giant_id) giant.push_back(v);
  if (giant.size() < 2)
    throw std::invalid_argument("giant component smaller than 2 vertices");
  Rng rng(derive_seed(seed, {stream_tag::pairs}));
  std::vector<std::int32_t> out;
  out.reserve(pair_count);
  for (std::uint64_t k = 0; k < pair_count; ++k) {
    std::uint32_t u = giant[rng.below(giant.size())];
    std::uint32_t v = giant[rng.below(giant.size())];
    while (v == u) v = giant[rng.below(giant.size())];
    out.push_back(bfs_distance(g, u, v));
  }
  return out;
}

ShellSequence neighborhood_shells(const MultiGraph& g, std::uint32_t i0,
                                  std::uint32_t max_depth) {
  if (i0 >= g.vertex_count()) throw std::out_of_range("vertex out of range");
  ShellSequence out;
  std::vector<bool> seen(g.vertex_count(), false);
  seen[i0] = true;
  out.shells.push_back({i0});
  for (std::uint32_t depth = 0; depth < max_depth; ++depth) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : out.shells.back()) {
      for (const auto& e : g.neighbors(v)) {
        if (!seen[e.neighbor]) {
          seen[e.neighbor] = true;
          next.push_back(e.neighbor);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.shells.push_back(std::move(next));
  }
  return out;
}

InducedSubgraph induced_subgraph(const MultiGraph& g,
                                 const std::vector<std::uint32_t>& keep) {
  InducedSubgraph out;
  out.old_ids = keep;
  std::sort(out.old_ids.begin(), out.old_ids.end());
  out.old_ids.erase(std::unique(out.old_ids.begin(), out.old_ids.end()),
                    out.old_ids.end());
  std::vector<std::uint32_t> new_id(g.vertex_count(), UINT32_MAX);
  for (std::uint32_t i = 0; i < out.old_ids.size(); ++i) {
    if (out.old_ids[i] >= g.vertex_count())
      throw std::out_of_range("keep vertex out of range");
    new_id[out.old_ids[i]] = i;
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u : out.old_ids) {
    for (const auto& e : g.neighbors(u)) {
      if (e.neighbor < u) continue;  // each pair once (loops included)
      if (new_id[e.neighbor] == UINT32_MAX) continue;
      for (std::uint32_t k = 0; k < e.multiplicity; ++k)
        edges.emplace_back(new_id[u], new_id[e.neighbor]);
    }
  }
  out.graph = MultiGraph::from_edges(
      static_cast<std::uint32_t>(out.old_ids.size()), std::move(edges));
  return out;
}

std::uint32_t exact_component_diameter(const MultiGraph& g,
                                       std::uint32_t vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw std::invalid_argument("graph above all-sources BFS cap");
  if (g.vertex_count() == 0)
    throw std::invalid_argument("empty graph has no component");
  const auto labeling = connected_components(g);
  std::uint32_t diam = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (labeling.label[v] != labeling.giant_id) continue;
    const auto dist = bfs_distances(g, v);
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
      if (dist[u] > static_cast<std::int32_t>(diam))
        diam = static_cast<std::uint32_t>(dist[u]);
  }
  return diam;
}

}  // namespace nrg
