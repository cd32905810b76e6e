#pragma once

// Brute-force reference enumerator for cross-checking the optimized one.
// Deliberately written in a different style and kept free of the library's
// search tricks: plain recursion, a std::set for visited vertices, no
// distance pruning, no canonical-direction shortcut. Polygons are counted as
// closed returns and halved at the end.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hsaw/planar_map.hpp"

namespace naive {

struct Result {
  std::vector<std::uint64_t> saws;            // saws[n], n = 0..n_max
  std::vector<std::uint64_t> closed_returns;  // directed closed walks
  std::vector<std::uint64_t> saps;            // closed_returns / 2
  // Canonical edge sets seen, for uniqueness cross-checks.
  std::set<std::vector<std::pair<int, int>>> sap_edge_sets;
};

namespace detail {

inline void walk(const hsaw::PlanarMap& map, std::vector<hsaw::VertexId>& path,
                 std::set<hsaw::VertexId>& used, int n_max, Result& out) {
  int steps = static_cast<int>(path.size()) - 1;
  if (steps >= 2 && steps + 1 <= n_max) {
    for (hsaw::VertexId w : map.rotation(path.back())) {
      if (w == map.origin()) {
        out.closed_returns[steps + 1] += 1;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          edges.emplace_back(std::min(path[i], path[i + 1]),
                             std::max(path[i], path[i + 1]));
        edges.emplace_back(std::min(path.back(), path.front()),
                           std::max(path.back(), path.front()));
        std::sort(edges.begin(), edges.end());
        out.sap_edge_sets.insert(edges);
      }
    }
  }
  if (steps == n_max) return;
  for (hsaw::VertexId w : map.rotation(path.back())) {
    if (w == hsaw::kNoVertex || used.count(w)) continue;
    used.insert(w);
    path.push_back(w);
    out.saws[steps + 1] += 1;
    walk(map, path, used, n_max, out);
    path.pop_back();
    used.erase(w);
  }
}

}  // namespace detail

inline Result enumerate(const hsaw::PlanarMap& map, int n_max) {
  Result out;
  out.saws.assign(n_max + 1, 0);
  out.saws[0] = 1;
  out.closed_returns.assign(n_max + 1, 0);
  std::vector<hsaw::VertexId> path{map.origin()};
  std::set<hsaw::VertexId> used{map.origin()};
  detail::walk(map, path, used, n_max, out);
  out.saps.assign(n_max + 1, 0);
  for (int n = 0; n <= n_max; ++n) {
    if (out.closed_returns[n] % 2 != 0)
      throw std::logic_error("closed return count must be even");
    out.saps[n] = out.closed_returns[n] / 2;
  }
  return out;
}

// Girth through the origin: shortest cycle using each origin edge, found by
// BFS after deleting that edge.
inline int girth_through_origin(const hsaw::PlanarMap& map) {
  int best = -1;
  auto o = map.origin();
  for (hsaw::VertexId w : map.rotation(o)) {
    if (w == hsaw::kNoVertex) continue;
    std::vector<int> dist(map.vertex_count(), -1);
    std::vector<hsaw::VertexId> queue{o};
    dist[o] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      hsaw::VertexId v = queue[head];
      for (hsaw::VertexId u : map.rotation(v)) {
        if (u == hsaw::kNoVertex || dist[u] != -1) continue;
        if ((v == o && u == w) || (v == w && u == o)) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
    if (dist[w] >= 0) {
      int cycle = dist[w] + 1;
      if (best < 0 || cycle < best) best = cycle;
    }
  }
  return best;
}

}  // namespace naive
