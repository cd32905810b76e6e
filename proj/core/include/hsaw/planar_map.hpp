#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hsaw/params.hpp"

namespace hsaw {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr FaceId kNoFace = -1;

struct BuildOptions {
  std::uint64_t vertex_budget = 5'000'000;
};

// A finite ball of the tessellation H(d,k) around an origin vertex,
// represented as a rotation system: every vertex carries the clockwise
// cyclic order of its neighbours. Faces are the orbits of the
// next-after-predecessor walk in that system.
//
// Construction is deterministic: faces are closed in (layer, vertex index)
// order, so rebuilding with a larger radius reproduces the smaller map
// index-for-index. Vertex 0 is the origin. Every vertex whose layer is
// strictly less than complete_within() has its full degree d and all d
// incident faces closed; vertices beyond that are partially built frontier.
//
// A finished map is immutable and safe for concurrent readers.
class PlanarMap {
public:
  static PlanarMap build_ball(TessellationParams params, int radius,
                              BuildOptions options = {});

  const TessellationParams& params() const { return params_; }
  int degree() const { return params_.d; }
  int face_degree() const { return params_.k; }
  int radius() const { return radius_; }
  int complete_within() const { return complete_within_; }

  VertexId origin() const { return 0; }
  std::int64_t vertex_count() const { return layer_.size(); }
  std::int64_t edge_count() const { return edges_.size(); }
  std::int64_t face_count() const { return face_vertices_.size() / params_.k; }

  // Graph distance from the origin, exact for every vertex with
  // layer <= complete_within; an upper estimate on deeper frontier.
  int layer(VertexId v) const { return layer_[v]; }

  // Clockwise neighbour list; kNoVertex marks unfilled frontier slots.
  std::span<const VertexId> rotation(VertexId v) const {
    return {rot_.data() + static_cast<std::size_t>(v) * params_.d,
            static_cast<std::size_t>(params_.d)};
  }

  VertexId neighbor(VertexId v, int slot) const {
    return rot_[static_cast<std::size_t>(v) * params_.d + slot];
  }

  int filled_degree(VertexId v) const;

  // Slot of u in v's rotation, or -1.
  int slot_of(VertexId v, VertexId u) const;

  EdgeId edge_at_slot(VertexId v, int slot) const {
    return edge_of_[static_cast<std::size_t>(v) * params_.d + slot];
  }

  // Edge id joining u and v, or kNoEdge.
  EdgeId edge_between(VertexId u, VertexId v) const;

  // Endpoints stored as (min id, max id).
  std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const { return edges_[e]; }

  // The one or two closed faces along an edge; kNoFace where unbuilt.
  const std::array<FaceId, 2>& edge_faces(EdgeId e) const { return edge_faces_[e]; }

  std::span<const VertexId> face_vertices(FaceId f) const {
    return {face_vertices_.data() + static_cast<std::size_t>(f) * params_.k,
            static_cast<std::size_t>(params_.k)};
  }
  std::span<const EdgeId> face_edges(FaceId f) const {
    return {face_edges_.data() + static_cast<std::size_t>(f) * params_.k,
            static_cast<std::size_t>(params_.k)};
  }

  // Number of closed faces incident to v.
  int closed_corner_count(VertexId v) const;

  bool vertex_complete(VertexId v) const {
    return filled_degree(v) == params_.d && closed_corner_count(v) == params_.d;
  }

private:
  friend class MapBuilder;

  TessellationParams params_;
  int radius_ = 0;
  int complete_within_ = 0;

  std::vector<VertexId> rot_;      // V * d, clockwise, kNoVertex = unset
  std::vector<EdgeId> edge_of_;    // V * d, aligned with rot_
  std::vector<std::uint64_t> corner_closed_;  // V bitmasks (d <= 64)
  std::vector<std::int32_t> layer_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::array<FaceId, 2>> edge_faces_;
  std::vector<VertexId> face_vertices_;  // F * k, min id first, orbit order
  std::vector<EdgeId> face_edges_;       // F * k, edge i joins verts i, i+1
};

// Diagnostic sweep over the complete region of a map. Empty vectors on a
// correct build.
struct ValidationReport {
  std::vector<VertexId> degree_violations;
  std::vector<VertexId> corner_violations;   // missing incident faces
  std::vector<FaceId> face_violations;       // not a k-cycle of the rotation
  std::vector<VertexId> rotation_violations; // asymmetric adjacency
  std::vector<VertexId> layer_violations;    // stored layer != BFS distance
  long long euler_defect = 0;                // V - E + F - 1 on closed subcomplex

  bool ok() const {
    return degree_violations.empty() && corner_violations.empty() &&
           face_violations.empty() && rotation_violations.empty() &&
           layer_violations.empty() && euler_defect == 0;
  }
};

ValidationReport validate_map(const PlanarMap& map);

enum class LayerScheme {
  ball_boundary,      // graph distance from the origin
  polygon_incidence,  // iterated face-incidence shells
};

struct LayerAssignment {
  std::vector<std::int32_t> layer;  // -1 where undefined
  int defined_through = 0;          // assignments valid for layer <= this
};

LayerAssignment layers(const PlanarMap& map, LayerScheme scheme);

// Neighbourhood classes used by the layered-walk recurrences. S1 is always
// the origin. For H(7,3) under ball-boundary layers the classes split by
// next-layer neighbour counts (S2: three; S3..S5: four, refined by the two
// same-layer neighbours' counts). For H(4,5) under polygon-incidence layers
// S2 has one next-layer neighbour, S3 has two plus two S2 same-layer
// neighbours, S4 is the rest.
enum class VertexClass { S1, S2, S3, S4, S5 };

std::string to_string(VertexClass c);

// Throws UsageError for (d,k)/scheme pairs with no classification defined,
// InvariantError if v or a same-layer neighbour lies outside the complete
// region.
VertexClass vertex_class(const PlanarMap& map, const LayerAssignment& layers,
                         VertexId v, LayerScheme scheme);

}  // namespace hsaw
