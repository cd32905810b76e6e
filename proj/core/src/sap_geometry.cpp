#include "hsaw/sap_geometry.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "hsaw/errors.hpp"

namespace hsaw {

namespace {

struct FloodResult {
  std::vector<FaceId> faces;
  bool touched_frontier = false;  // crossed an edge with a missing face
  bool overflowed = false;        // exceeded the interior size cap
};

// Dual-graph flood from `start`, never crossing polygon edges. Stops early
// when the component exceeds `cap` faces, which certifies it cannot be the
// bounded side.
FloodResult flood(const PlanarMap& map, FaceId start,
                  const std::unordered_set<EdgeId>& polygon_edges,
                  std::size_t cap) {
  FloodResult res;
  std::unordered_set<FaceId> seen{start};
  std::queue<FaceId> q;
  q.push(start);
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop();
    res.faces.push_back(f);
    if (res.faces.size() > cap) {
      res.overflowed = true;
      return res;
    }
    for (EdgeId e : map.face_edges(f)) {
      if (polygon_edges.contains(e)) continue;
      const auto& pair = map.edge_faces(e);
      FaceId other = (pair[0] == f) ? pair[1] : pair[0];
      if (other == kNoFace) {
        res.touched_frontier = true;
        continue;
      }
      if (seen.insert(other).second) q.push(other);
    }
  }
  return res;
}

}  // namespace

SapGeometry analyze_sap(const PlanarMap& map, const Sap& sap) {
  const int n = sap.length();
  if (n < 3) throw UsageError("analyze_sap: polygon shorter than girth");

  SapGeometry geom;
  geom.sap = sap;

  std::unordered_set<VertexId> on_p;
  std::unordered_set<EdgeId> p_edges;
  int max_layer = 0;
  for (auto [u, v] : sap.edges) {
    on_p.insert(u);
    on_p.insert(v);
    EdgeId e = map.edge_between(u, v);
    if (e == kNoEdge)
      throw UsageError("analyze_sap: polygon edge not present in map");
    p_edges.insert(e);
    max_layer = std::max({max_layer, map.layer(u), map.layer(v)});
  }
  if (static_cast<int>(on_p.size()) != n)
    throw UsageError("analyze_sap: edge set is not a single cycle");
  if (!on_p.contains(map.origin()))
    throw UsageError("analyze_sap: polygon does not pass through the origin");
  if (max_layer > map.complete_within() - 2)
    throw UsageError(
        "analyze_sap: polygon too close to the map frontier; interior faces "
        "are not guaranteed closed (need radius >= polygon reach + 2)");

  // The two faces along any polygon edge are the seeds of the two sides.
  EdgeId seed = *p_edges.begin();
  const auto& seed_faces = map.edge_faces(seed);
  if (seed_faces[0] == kNoFace || seed_faces[1] == kNoFace)
    throw CertificationError("analyze_sap: polygon edge on the map frontier");

  const std::size_t cap = static_cast<std::size_t>(3) * map.degree() * n + 16;
  FloodResult side_a = flood(map, seed_faces[0], p_edges, cap);
  FloodResult side_b = flood(map, seed_faces[1], p_edges, cap);

  auto certified = [](const FloodResult& r) {
    return !r.overflowed && !r.touched_frontier;
  };
  const FloodResult* interior = nullptr;
  if (certified(side_a) && !certified(side_b)) interior = &side_a;
  if (certified(side_b) && !certified(side_a)) interior = &side_b;
  if (!interior) {
    if (certified(side_a) && certified(side_b))
      throw CertificationError(
          "analyze_sap: both sides look bounded; map too small to decide");
    throw CertificationError(
        "analyze_sap: no side of the polygon could be certified as bounded");
  }
  geom.interior_faces = interior->faces;
  std::sort(geom.interior_faces.begin(), geom.interior_faces.end());

  // Interior vertices, interior edges and their statistics.
  std::unordered_set<VertexId> inside;
  std::unordered_set<EdgeId> interior_edges;
  for (FaceId f : geom.interior_faces) {
    for (VertexId v : map.face_vertices(f))
      if (!on_p.contains(v)) inside.insert(v);
    for (EdgeId e : map.face_edges(f))
      if (!p_edges.contains(e)) interior_edges.insert(e);
  }
  geom.interior_vertices.assign(inside.begin(), inside.end());
  std::sort(geom.interior_vertices.begin(), geom.interior_vertices.end());

  for (EdgeId e : interior_edges) {
    auto [u, v] = map.edge_endpoints(e);
    int ends_on_p = on_p.contains(u) + on_p.contains(v);
    geom.directed_interior_edges_from_p += ends_on_p;
    if (ends_on_p == 2) geom.chords.emplace_back(u, v);
  }
  std::sort(geom.chords.begin(), geom.chords.end());

  // Inner vertex boundary: interior vertices on a face meeting the polygon;
  // n' counts, over those polygon-incident faces, the edge sides with both
  // ends strictly inside.
  std::unordered_set<VertexId> boundary;
  for (FaceId f : geom.interior_faces) {
    auto fv = map.face_vertices(f);
    bool meets_p = false;
    for (VertexId v : fv) meets_p = meets_p || on_p.contains(v);
    if (!meets_p) continue;
    for (VertexId v : fv)
      if (!on_p.contains(v)) boundary.insert(v);
    for (EdgeId e : map.face_edges(f)) {
      auto [u, v] = map.edge_endpoints(e);
      if (!on_p.contains(u) && !on_p.contains(v))
        ++geom.boundary_contour_length;
    }
  }
  geom.inner_boundary.assign(boundary.begin(), boundary.end());
  std::sort(geom.inner_boundary.begin(), geom.inner_boundary.end());

  // Connectivity of the inner boundary in the induced subgraph.
  if (!geom.inner_boundary.empty()) {
    std::unordered_set<VertexId> todo(boundary.begin(), boundary.end());
    std::queue<VertexId> q;
    q.push(*geom.inner_boundary.begin());
    todo.erase(*geom.inner_boundary.begin());
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : map.rotation(v))
        if (w != kNoVertex && todo.contains(w)) {
          todo.erase(w);
          q.push(w);
        }
    }
    geom.inner_boundary_connected = todo.empty();
  }

  return geom;
}

long long check_edges_enum(const SapGeometry& geom, TessellationParams params) {
  long long n = geom.length();
  long long interior = static_cast<long long>(geom.interior_vertices.size());
  long long rhs = 2 * n - 2 * params.k - params.excess() * interior;
  return geom.directed_interior_edges_from_p * (params.k - 2) - rhs;
}

NoChordCheck check_no_chord_case(const SapGeometry& geom,
                                 TessellationParams params) {
  NoChordCheck out;
  if (!geom.chords.empty()) {
    out.reason = "polygon has inner chords";
    return out;
  }
  if (geom.inner_boundary.empty()) {
    out.reason = "inner vertex boundary is empty";
    return out;
  }
  if (!geom.inner_boundary_connected) {
    out.reason = "inner vertex boundary is disconnected";
    return out;
  }
  out.applicable = true;
  long long n = geom.length();
  long long interior = static_cast<long long>(geom.interior_vertices.size());
  out.residual = geom.boundary_contour_length -
                 (n - 2 * params.k - params.excess() * interior);
  return out;
}

long long check_main_lemma(const SapGeometry& geom, TessellationParams params) {
  long long n = geom.length();
  long long chords = static_cast<long long>(geom.chords.size());
  long long boundary = static_cast<long long>(geom.inner_boundary.size());
  return (n - params.k) -
         ((params.k - 2) * chords + (params.excess() + 1) * boundary);
}

}  // namespace hsaw
