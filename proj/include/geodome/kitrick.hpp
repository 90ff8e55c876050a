#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "geodome/base_triangle.hpp"
#include "geodome/polymesh.hpp"
#include "geodome/sphgeo.hpp"

// Kitrick's polyhedra: the inscribed dodecahedron's 12 spherical pentagons
// are split into 60 isosceles 72°-60°-60° triangles; each is cut by the
// meridians and parallels through n equal divisions of its equal sides, and
// every second grid point on each meridian is connected. m = 60 n² faces.
//
// Canonical frame of one triangle: the apex (pentagon center) is (1,0,0),
// its symmetry axis runs along the xy-plane equator towards +y, and the pole
// is +z. P(i, j) is the intersection of meridian i (longitude a_i) with
// parallel j (latitude b_j, negative below the equator):
//   tan a_i = tan((i/n) c) cos 36°,   sin b_j = sin((j/n) c) sin 36°.
//
// Note on naming: the legs are labelled by their formulas (a is the leg on
// the symmetry axis, 31.7175°; b the half pentagon edge, 20.9052°). Read as
// "side opposite the 36°/60°/90° angle" the a/b prose labels would swap;
// the formulas, which the construction uses, are authoritative here.
namespace geodome::kitrick {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kMaxN = 64;
inline constexpr int kCopies = 60;
inline constexpr double kMergeTolerance = 1e-9;

/// A grid point of one triangle copy; |j| <= i <= n.
struct GridIndex {
  int copy = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Longitude a_i of meridian i.
double meridian_longitude(int n, int i);
/// Latitude b_j of parallel j (odd in j).
double parallel_latitude(int n, int j);

/// P(i, j) in the canonical frame. Any |j| <= i is accepted; the
/// triangulation uses only i ≡ j (mod 2). Throws IndexOutOfRange.
UnitVec kitrick_vertex(int n, int i, int j);

struct LocalEdge {
  int a = 0;  // indices into CanonicalPatch::points
  int b = 0;
  EdgeKind kind = EdgeKind::other;
};

/// Triangulation of one canonical triangle.
struct CanonicalPatch {
  int n = 0;
  std::vector<GridIndex> points;  // copy = 0; ordered by i, then j
  std::vector<std::array<int, 3>> faces;
  std::vector<LocalEdge> edges;

  /// Position of P(i, j) in `points`; requires i ≡ j (mod 2).
  static int index_of(int i, int j) { return i * (i + 1) / 2 + (j + i) / 2; }
};

/// Vertices P(i, j) with |j| <= i <= n, i ≡ j (mod 2); per strip between
/// meridians i and i+1 the triangles {P(i,j), P(i+1,j-1), P(i+1,j+1)} and
/// {P(i,j), P(i,j+2), P(i+1,j+1)}: n² faces. Meridional edges join P(i,j)
/// and P(i,j+2); diagonal edges join P(i,j) and P(i+1,j±1).
CanonicalPatch canonical_triangle_mesh(int n);

/// The 60 frames placing the canonical triangle on the sphere: copy 5p + k
/// has its apex at pentagon p's center and its symmetry axis towards the
/// midpoint of the pentagon edge (corner k, corner k+1).
std::vector<Frame> copy_frames();

/// The full polyhedron, F = 60n², V = 30n² + 2, E = 90n². Boundary points
/// shared by neighbouring copies are merged geometrically; throws
/// DedupMismatch if the merged count differs from 30n² + 2 and
/// std::invalid_argument unless 1 <= n <= kMaxN.
TriangleMesh build_kitrick(int n);

/// 2 sin 36° cos(c / 2n).
double kitrick_eta_closed_form(int n);

/// Where the extreme edges of a built Kitrick mesh lie, as distinct mesh
/// edges. "Apex faces" are the n=1-sized faces at each pentagon center.
struct ExtremalEdgeReport {
  std::size_t longest = 0;   // edges tied with the maximum
  std::size_t shortest = 0;  // edges tied with the minimum
  std::size_t apex_bases = 0;  // meridional P(1,-1)P(1,1)
  std::size_t apex_legs = 0;   // diagonal P(0,0)P(1,±1)

  bool apex_bases_longest = false;  // every apex base is a longest edge
  bool apex_legs_shortest = false;  // every apex leg is a shortest edge

  /// The longest edges are exactly the meridional edges P(i,-1)P(i,1)
  /// (i odd), whose arc 2 b_1 does not depend on i.
  bool longest_equals_equator_crossings = false;
  std::size_t equator_crossings = 0;
  /// The shortest edges are exactly the diagonal edges P(i,±i)P(i+1,±(i+1))
  /// on the triangles' equal sides, each of arc c/n.
  bool shortest_equals_side_edges = false;
  std::size_t side_edges = 0;

  /// Whether the extremes are only the apex-face edges.
  bool longest_only_apex_bases = false;
  bool shortest_only_apex_legs = false;
};
ExtremalEdgeReport check_extremal_edges(const TriangleMesh& mesh);

}  // namespace geodome::kitrick
