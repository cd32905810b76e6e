#include "hsaw/planar_map.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>

#include "hsaw/errors.hpp"

namespace hsaw {

namespace {
constexpr std::int32_t kUnknown = std::numeric_limits<std::int32_t>::max();
}

int PlanarMap::filled_degree(VertexId v) const {
  int d = params_.d, n = 0;
  const VertexId* r = rot_.data() + static_cast<std::size_t>(v) * d;
  for (int i = 0; i < d; ++i) n += (r[i] != kNoVertex);
  return n;
}

int PlanarMap::slot_of(VertexId v, VertexId u) const {
  int d = params_.d;
  const VertexId* r = rot_.data() + static_cast<std::size_t>(v) * d;
  for (int i = 0; i < d; ++i)
    if (r[i] == u) return i;
  return -1;
}

EdgeId PlanarMap::edge_between(VertexId u, VertexId v) const {
  int s = slot_of(u, v);
  return s < 0 ? kNoEdge : edge_at_slot(u, s);
}

int PlanarMap::closed_corner_count(VertexId v) const {
  return std::popcount(corner_closed_[v]);
}

// ---------------------------------------------------------------------------
// Construction: face-closing frontier.
//
// Every vertex has d slots in clockwise order. The face orbit through a
// directed edge (a -> b) continues to the neighbour of b immediately after a
// in b's rotation. Corner c of v is the face passing rot[v][c] -> v ->
// rot[v][c+1]. Faces are closed one at a time: the orbit through a corner is
// walked along existing edges as far as possible and the remaining gap is
// filled with a chain of new vertices. Filled slots of a vertex always form
// one contiguous cyclic arc; faces only ever attach at its ends.
// ---------------------------------------------------------------------------
class MapBuilder {
public:
  MapBuilder(TessellationParams params, int radius, BuildOptions options)
      : p_(params), radius_(radius), opt_(options) {}

  PlanarMap run() {
    p_.ensure_hyperbolic();
    if (radius_ < 0) throw UsageError("radius must be >= 0");
    if (p_.d > 64) throw UsageError("vertex degree above 64 is not supported");

    new_vertex();  // origin
    if (radius_ >= 1) {
      VertexId first = new_vertex();
      add_edge(0, 0, first, 0);
      for (int level = 0; level < radius_; ++level) {
        recompute_dist();
        project_budget(level);
        std::size_t snapshot = dist_.size();
        for (VertexId v = 0; v < static_cast<VertexId>(snapshot); ++v)
          if (dist_[v] == level) close_all_corners(v);
        // Stability: once level-1 is fully closed no vertex can join this
        // level afterwards, so one sweep suffices. Verify that.
        recompute_dist();
        for (VertexId v = 0; v < static_cast<VertexId>(dist_.size()); ++v)
          if (dist_[v] == level &&
              (filled_cnt_[v] != p_.d ||
               std::popcount(corner_closed_[v]) != p_.d))
            throw InvariantError("map build: incomplete vertex left at level " +
                                 std::to_string(level));
      }
    }
    recompute_dist();

    PlanarMap m;
    m.params_ = p_;
    m.radius_ = radius_;
    m.complete_within_ = radius_;
    m.rot_ = std::move(rot_);
    m.edge_of_ = std::move(edge_of_);
    m.corner_closed_ = std::move(corner_closed_);
    m.layer_.assign(dist_.begin(), dist_.end());
    for (auto& l : m.layer_)
      if (l == kUnknown) l = -1;
    m.edges_ = std::move(edges_);
    m.edge_faces_ = std::move(edge_faces_);
    m.face_vertices_ = std::move(face_vertices_);
    m.face_edges_ = std::move(face_edges_);
    return m;
  }

private:
  VertexId new_vertex() {
    if (vertex_count() + 1 > opt_.vertex_budget)
      throw BudgetError("vertex budget of " + std::to_string(opt_.vertex_budget) +
                            " exhausted while building H(" + std::to_string(p_.d) +
                            "," + std::to_string(p_.k) + ") to radius " +
                            std::to_string(radius_),
                        vertex_count() + 1);
    rot_.insert(rot_.end(), p_.d, kNoVertex);
    edge_of_.insert(edge_of_.end(), p_.d, kNoEdge);
    corner_closed_.push_back(0);
    filled_cnt_.push_back(0);
    arc_start_.push_back(0);
    dist_.push_back(kUnknown);
    return static_cast<VertexId>(dist_.size() - 1);
  }

  std::uint64_t vertex_count() const { return dist_.size(); }

  VertexId rot_at(VertexId v, int s) const {
    return rot_[static_cast<std::size_t>(v) * p_.d + s];
  }

  int slot_of(VertexId v, VertexId u) const {
    const VertexId* r = rot_.data() + static_cast<std::size_t>(v) * p_.d;
    for (int i = 0; i < p_.d; ++i)
      if (r[i] == u) return i;
    throw InvariantError("slot_of: vertices not adjacent");
  }

  void fill_slot(VertexId v, int s, VertexId u, EdgeId e) {
    auto idx = static_cast<std::size_t>(v) * p_.d + s;
    if (rot_[idx] != kNoVertex)
      throw InvariantError("fill_slot: slot already occupied");
    int d = p_.d, cnt = filled_cnt_[v];
    if (cnt == 0) {
      arc_start_[v] = static_cast<std::uint8_t>(s);
    } else if (s == (arc_start_[v] + cnt) % d) {
      // append at arc end
    } else if (s == (arc_start_[v] + d - 1) % d) {
      arc_start_[v] = static_cast<std::uint8_t>(s);  // prepend
    } else {
      throw InvariantError("fill_slot: non-contiguous rotation arc");
    }
    rot_[idx] = u;
    edge_of_[idx] = e;
    filled_cnt_[v] = static_cast<std::uint8_t>(cnt + 1);
  }

  EdgeId add_edge(VertexId a, int sa, VertexId b, int sb) {
    EdgeId e = static_cast<EdgeId>(edges_.size());
    edges_.emplace_back(std::min(a, b), std::max(a, b));
    edge_faces_.push_back({kNoFace, kNoFace});
    fill_slot(a, sa, b, e);
    fill_slot(b, sb, a, e);
    return e;
  }

  bool corner_closed(VertexId v, int c) const {
    return (corner_closed_[v] >> c) & 1u;
  }

  void close_all_corners(VertexId v) {
    if (filled_cnt_[v] == 0)
      throw InvariantError("close_all_corners: isolated vertex");
    int start = arc_start_[v];
    for (int step = 0; step < p_.d; ++step)
      close_corner(v, (start + step) % p_.d);
    if (filled_cnt_[v] != p_.d || std::popcount(corner_closed_[v]) != p_.d)
      throw InvariantError("close_all_corners: vertex left incomplete");
  }

  void close_corner(VertexId v, int c) {
    if (corner_closed(v, c)) return;
    int d = p_.d, k = p_.k;
    VertexId u = rot_at(v, c);
    if (u == kNoVertex)
      throw InvariantError("close_corner: leading slot empty");

    std::deque<VertexId> verts{u, v};
    bool complete = false;
    // Forward along the orbit.
    while (true) {
      VertexId a = verts[verts.size() - 2], b = verts.back();
      VertexId w = rot_at(b, (slot_of(b, a) + 1) % d);
      if (w == kNoVertex) break;
      if (static_cast<int>(verts.size()) == k) {
        if (w != verts.front())
          throw InvariantError("close_corner: face orbit exceeds k");
        complete = true;
        break;
      }
      if (w == verts.front())
        throw InvariantError("close_corner: face orbit shorter than k");
      verts.push_back(w);
    }
    if (!complete) {
      // Backward along the orbit.
      while (static_cast<int>(verts.size()) < k) {
        VertexId a = verts[0], b = verts[1];
        VertexId t = rot_at(a, (slot_of(a, b) + d - 1) % d);
        if (t == kNoVertex) break;
        if (std::find(verts.begin(), verts.end(), t) != verts.end())
          throw InvariantError("close_corner: backward walk revisits vertex");
        verts.push_front(t);
      }
      int gap = k - static_cast<int>(verts.size());
      for (int t = 0; t < gap; ++t) {
        VertexId a = verts[verts.size() - 2], b = verts.back();
        int s_out = (slot_of(b, a) + 1) % d;
        VertexId nv = new_vertex();
        add_edge(b, s_out, nv, 0);
        verts.push_back(nv);
      }
      VertexId a = verts[verts.size() - 2], b = verts.back();
      int s_out = (slot_of(b, a) + 1) % d;
      int s_in = (slot_of(verts[0], verts[1]) + d - 1) % d;
      add_edge(b, s_out, verts[0], s_in);
    }
    register_face(std::vector<VertexId>(verts.begin(), verts.end()));
  }

  void register_face(std::vector<VertexId> verts) {
    int k = p_.k, d = p_.d;
    auto mn = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), mn, verts.end());
    FaceId f = static_cast<FaceId>(face_vertices_.size() / k);
    for (int i = 0; i < k; ++i) {
      VertexId y = verts[i];
      VertexId x = verts[(i + k - 1) % k];
      VertexId z = verts[(i + 1) % k];
      int sx = slot_of(y, x);
      if (rot_at(y, (sx + 1) % d) != z)
        throw InvariantError("register_face: orbit inconsistent with rotation");
      if (corner_closed(y, sx))
        throw InvariantError("register_face: corner closed twice");
      corner_closed_[y] |= std::uint64_t{1} << sx;
      EdgeId e = edge_of_[static_cast<std::size_t>(y) * d + slot_of(y, z)];
      auto& fp = edge_faces_[e];
      if (fp[0] == kNoFace)
        fp[0] = f;
      else if (fp[1] == kNoFace)
        fp[1] = f;
      else
        throw InvariantError("register_face: edge already has two faces");
      face_vertices_.push_back(y);
      face_edges_.push_back(e);
    }
  }

  void recompute_dist() {
    std::fill(dist_.begin(), dist_.end(), kUnknown);
    dist_[0] = 0;
    std::queue<VertexId> q;
    q.push(0);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      const VertexId* r = rot_.data() + static_cast<std::size_t>(v) * p_.d;
      for (int i = 0; i < p_.d; ++i) {
        VertexId w = r[i];
        if (w != kNoVertex && dist_[w] == kUnknown) {
          dist_[w] = dist_[v] + 1;
          q.push(w);
        }
      }
    }
  }

  // Extrapolate growth from the last two layer sizes and fail early when the
  // requested radius cannot possibly fit in the vertex budget. Early layer
  // ratios overshoot the asymptotic growth, so the projection only fires
  // once the build is past 1% of the budget (by then the ratio has settled)
  // and with a wide slack margin; the exact per-vertex check in new_vertex
  // is the real guarantee.
  void project_budget(int level) {
    if (level < 2) return;
    if (vertex_count() <= opt_.vertex_budget / 100) return;
    double s_prev = 0, s_cur = 0;
    for (auto dv : dist_) {
      if (dv == level - 1) ++s_prev;
      if (dv == level) ++s_cur;
    }
    if (s_prev <= 0 || s_cur <= 0) return;
    double ratio = std::max(1.0, s_cur / s_prev);
    double projected = static_cast<double>(vertex_count());
    double layer = s_cur;
    for (int rest = level; rest < radius_ + p_.k / 2; ++rest) {
      layer *= ratio;
      projected += layer;
      if (projected > 1e18) break;
    }
    if (projected > 50.0 * static_cast<double>(opt_.vertex_budget)) {
      auto needed = static_cast<std::uint64_t>(std::min(projected, 1e18));
      throw BudgetError(
          "building H(" + std::to_string(p_.d) + "," + std::to_string(p_.k) +
              ") to radius " + std::to_string(radius_) + " needs about " +
              std::to_string(needed) + " vertices; budget is " +
              std::to_string(opt_.vertex_budget),
          needed);
    }
  }

  TessellationParams p_;
  int radius_;
  BuildOptions opt_;

  std::vector<VertexId> rot_;
  std::vector<EdgeId> edge_of_;
  std::vector<std::uint64_t> corner_closed_;
  std::vector<std::uint8_t> filled_cnt_;
  std::vector<std::uint8_t> arc_start_;
  std::vector<std::int32_t> dist_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::array<FaceId, 2>> edge_faces_;
  std::vector<VertexId> face_vertices_;
  std::vector<EdgeId> face_edges_;
};

PlanarMap PlanarMap::build_ball(TessellationParams params, int radius,
                                BuildOptions options) {
  return MapBuilder(params, radius, options).run();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport validate_map(const PlanarMap& map) {
  ValidationReport rep;
  const int d = map.degree(), k = map.face_degree();
  const int cw = map.complete_within();
  const auto nv = map.vertex_count();

  // Independent BFS.
  std::vector<std::int32_t> dist(nv, -1);
  std::queue<VertexId> q;
  dist[map.origin()] = 0;
  q.push(map.origin());
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId w : map.rotation(v))
      if (w != kNoVertex && dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  for (VertexId v = 0; v < nv; ++v)
    if (dist[v] != map.layer(v)) rep.layer_violations.push_back(v);

  // Face incidence per vertex, counted from the face table.
  std::vector<std::int32_t> faces_at(nv, 0);
  for (FaceId f = 0; f < map.face_count(); ++f)
    for (VertexId v : map.face_vertices(f)) ++faces_at[v];

  for (VertexId v = 0; v < nv; ++v) {
    if (map.layer(v) >= cw || map.layer(v) < 0) continue;
    if (map.filled_degree(v) != d) rep.degree_violations.push_back(v);
    if (faces_at[v] != d || map.closed_corner_count(v) != d)
      rep.corner_violations.push_back(v);
    // Rotation symmetry and no duplicate neighbours.
    auto rot = map.rotation(v);
    for (int i = 0; i < d; ++i) {
      VertexId u = rot[i];
      if (u == kNoVertex) continue;
      int back = map.slot_of(u, v);
      bool dup = false;
      for (int j = i + 1; j < d; ++j) dup |= (rot[j] == u);
      if (back < 0 || dup || map.edge_at_slot(u, back) != map.edge_at_slot(v, i)) {
        rep.rotation_violations.push_back(v);
        break;
      }
    }
  }

  // Every face must re-trace as a k-cycle of the rotation system.
  for (FaceId f = 0; f < map.face_count(); ++f) {
    auto fv = map.face_vertices(f);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      VertexId x = fv[(i + k - 1) % k], y = fv[i], z = fv[(i + 1) % k];
      int sx = map.slot_of(y, x);
      ok = sx >= 0 && map.neighbor(y, (sx + 1) % d) == z;
      for (int j = i + 1; j < k; ++j) ok = ok && fv[j] != fv[i];
    }
    if (!ok) rep.face_violations.push_back(f);
  }

  // Euler characteristic of the closed subcomplex spanned by faces whose
  // vertices all lie strictly inside the complete region.
  std::vector<char> v_in(nv, 0);
  std::vector<char> e_in(map.edge_count(), 0);
  long long fcount = 0;
  for (FaceId f = 0; f < map.face_count(); ++f) {
    auto fv = map.face_vertices(f);
    bool inside = true;
    for (VertexId v : fv) inside = inside && map.layer(v) >= 0 && map.layer(v) < cw;
    if (!inside) continue;
    ++fcount;
    for (VertexId v : fv) v_in[v] = 1;
    for (EdgeId e : map.face_edges(f)) e_in[e] = 1;
  }
  if (fcount > 0) {
    long long vcount = std::count(v_in.begin(), v_in.end(), 1);
    long long ecount = std::count(e_in.begin(), e_in.end(), 1);
    rep.euler_defect = vcount - ecount + fcount - 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Layer schemes and vertex classes
// ---------------------------------------------------------------------------

LayerAssignment layers(const PlanarMap& map, LayerScheme scheme) {
  LayerAssignment out;
  const auto nv = map.vertex_count();
  if (scheme == LayerScheme::ball_boundary) {
    out.layer.resize(nv);
    for (VertexId v = 0; v < nv; ++v) out.layer[v] = map.layer(v);
    out.defined_through = map.complete_within();
    return out;
  }

  // polygon_incidence: shell t+1 is every unassigned vertex lying on a face
  // that meets shell t.
  out.layer.assign(nv, -1);
  std::vector<std::vector<FaceId>> faces_of(nv);
  for (FaceId f = 0; f < map.face_count(); ++f)
    for (VertexId v : map.face_vertices(f)) faces_of[v].push_back(f);

  std::vector<VertexId> frontier{map.origin()};
  out.layer[map.origin()] = 0;
  int t = 0;
  while (!frontier.empty()) {
    bool expandable = true;
    for (VertexId v : frontier)
      expandable = expandable && map.layer(v) >= 0 && map.layer(v) < map.complete_within();
    if (!expandable) break;
    std::vector<VertexId> next;
    for (VertexId v : frontier)
      for (FaceId f : faces_of[v])
        for (VertexId w : map.face_vertices(f))
          if (out.layer[w] == -1) {
            out.layer[w] = t + 1;
            next.push_back(w);
          }
    frontier = std::move(next);
    ++t;
  }
  out.defined_through = t;
  return out;
}

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::S1: return "S1";
    case VertexClass::S2: return "S2";
    case VertexClass::S3: return "S3";
    case VertexClass::S4: return "S4";
    case VertexClass::S5: return "S5";
  }
  return "?";
}

namespace {

int count_at_layer(const PlanarMap& map, const LayerAssignment& la, VertexId v,
                   int target) {
  int n = 0;
  for (VertexId w : map.rotation(v))
    if (w != kNoVertex && la.layer[w] == target) ++n;
  return n;
}

void require_inside(const PlanarMap& map, VertexId v) {
  if (map.layer(v) < 0 || map.layer(v) >= map.complete_within())
    throw std::out_of_range("vertex_class: vertex " + std::to_string(v) +
                            " outside the complete region");
}

}  // namespace

VertexClass vertex_class(const PlanarMap& map, const LayerAssignment& la,
                         VertexId v, LayerScheme scheme) {
  const auto& p = map.params();
  const bool h73 = p.d == 7 && p.k == 3 && scheme == LayerScheme::ball_boundary;
  const bool h45 = p.d == 4 && p.k == 5 && scheme == LayerScheme::polygon_incidence;
  if (!h73 && !h45)
    throw UsageError("no classification defined for H(" + std::to_string(p.d) +
                     "," + std::to_string(p.k) + ") under this layer scheme");
  if (v == map.origin()) return VertexClass::S1;
  require_inside(map, v);
  int mine = la.layer[v];
  if (mine < 0)
    throw std::out_of_range("vertex_class: no layer assigned to vertex " +
                            std::to_string(v));

  if (h73) {
    int next = count_at_layer(map, la, v, mine + 1);
    if (next == 3) return VertexClass::S2;
    if (next != 4)
      throw InvariantError("H(7,3) vertex with unexpected next-layer count " +
                           std::to_string(next));
    int same_next[2], found = 0;
    for (VertexId w : map.rotation(v)) {
      if (w == kNoVertex || la.layer[w] != mine) continue;
      require_inside(map, w);
      if (found >= 2)
        throw InvariantError("H(7,3) vertex with more than two same-layer neighbours");
      same_next[found++] = count_at_layer(map, la, w, mine + 1);
    }
    if (found != 2)
      throw InvariantError("H(7,3) vertex without two same-layer neighbours");
    int fours = (same_next[0] == 4) + (same_next[1] == 4);
    if (fours == 2) return VertexClass::S3;
    if (fours == 1) return VertexClass::S4;
    return VertexClass::S5;
  }

  // H(4,5)
  int next = count_at_layer(map, la, v, mine + 1);
  if (next == 1) return VertexClass::S2;
  int s2_same = 0;
  for (VertexId w : map.rotation(v)) {
    if (w == kNoVertex || la.layer[w] != mine || w == map.origin()) continue;
    require_inside(map, w);
    if (count_at_layer(map, la, w, mine + 1) == 1) ++s2_same;
  }
  if (next == 2 && s2_same == 2) return VertexClass::S3;
  return VertexClass::S4;
}

}  // namespace hsaw
