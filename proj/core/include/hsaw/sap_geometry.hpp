#pragma once

#include <utility>
#include <vector>

#include "hsaw/enumeration.hpp"
#include "hsaw/planar_map.hpp"

namespace hsaw {

// Combinatorial interior of a SAP: the faces of the bounded side, the
// vertices strictly inside (I), the inner chords (interior edges with both
// ends on the polygon), and the inner vertex boundary (interior vertices
// lying on a face that meets the polygon).
struct SapGeometry {
  Sap sap;
  std::vector<FaceId> interior_faces;
  std::vector<VertexId> interior_vertices;               // I
  std::vector<std::pair<VertexId, VertexId>> chords;     // ch(P)
  std::vector<VertexId> inner_boundary;                  // the vertex boundary
  bool inner_boundary_connected = false;
  long long directed_interior_edges_from_p = 0;  // m: directed (x,y), x on P
  long long boundary_contour_length = 0;         // n': see analyze_sap

  int length() const { return sap.length(); }
};

// Identifies the bounded side of the polygon by flooding the dual graph of
// closed faces on both sides of it; the side that stays finite without
// touching unbuilt territory is the interior. Throws CertificationError if
// no side can be certified (map too small) and UsageError if the polygon
// leaves the region where interior faces are guaranteed closed.
//
// n' (boundary_contour_length) counts edge-sides of polygon-incident
// interior faces lying on the inner contour: for every interior face that
// meets the polygon, its edges with both endpoints strictly inside.
SapGeometry analyze_sap(const PlanarMap& map, const Sap& sap);

// m(k-2) - (2|P| - 2k - ((d-2)(k-2)-4)|I|); zero certifies the edge count
// identity.
long long check_edges_enum(const SapGeometry& geom, TessellationParams params);

struct NoChordCheck {
  bool applicable = false;   // requires ch empty, boundary nonempty connected
  long long residual = 0;    // n' - (|P| - 2k - ((d-2)(k-2)-4)|I|)
  const char* reason = "";   // why not applicable
};

NoChordCheck check_no_chord_case(const SapGeometry& geom,
                                 TessellationParams params);

// (|P| - k) - [(k-2)|ch| + ((d-2)(k-2)-3)|inner boundary|]; nonnegative
// certifies the isoperimetric inequality.
long long check_main_lemma(const SapGeometry& geom, TessellationParams params);

}  // namespace hsaw
