#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hsaw/bigint.hpp"
#include "hsaw/planar_map.hpp"

namespace hsaw {

// Exact counts indexed by walk length. All counting is integer-exact;
// nothing in the enumeration path touches floating point.
struct CountTable {
  enum class Kind { saw, sap, saw_to_vertex };
  Kind kind = Kind::saw;
  std::vector<BigUint> values;  // values[n] for n = 0..n_max

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// A self-avoiding polygon through the origin in canonical form: the sorted
// set of its undirected edges, each as (min vertex id, max vertex id). Two
// traversals of the same cycle produce the same canonical form.
struct Sap {
  std::vector<std::pair<VertexId, VertexId>> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool operator==(const Sap&) const = default;
  bool operator<(const Sap& o) const { return edges < o.edges; }
};

// Number of SAWs of each length 0..n_max starting at the origin.
// Requires n_max <= map.complete_within().
CountTable count_saws(const PlanarMap& map, int n_max, int workers = 1);

// Number of SAPs (unordered edge sets through the origin) of each length.
CountTable count_saps(const PlanarMap& map, int n_max, int workers = 1);

// Number of SAWs of length exactly n from the origin to y.
BigUint count_saws_to(const PlanarMap& map, int n, VertexId y);

// Per-endpoint counts at length exactly n; index is the vertex id.
std::vector<BigUint> endpoint_counts(const PlanarMap& map, int n);

struct DisplacementHistogram {
  int n = 0;
  std::vector<BigUint> by_distance;  // by_distance[r] = #SAWs with d(o, end) = r
  BigUint total;                     // equals c_n

  // P(d(o, omega(n)) >= eps * n), exact counts, double-valued ratio.
  double prob_at_least(double eps) const;
};

DisplacementHistogram displacement_distribution(const PlanarMap& map, int n,
                                                int workers = 1);

// Streams every SAP through the origin of length <= n_max exactly once, in
// canonical form. Deterministic order.
void enumerate_saps(const PlanarMap& map, int n_max,
                    const std::function<void(const Sap&)>& sink);

}  // namespace hsaw
