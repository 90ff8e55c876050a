#pragma once

#include <array>
#include <vector>

#include "geodome/polymesh.hpp"
#include "geodome/sphgeo.hpp"

namespace geodome {

// Regular solids inscribed in S². The icosahedron and dodecahedron share the
// orientation in which the coordinate planes are mirror planes and the
// dodecahedron has a vertex at (1,1,1)/sqrt(3).

double golden_ratio();

/// Directions of (0, ±1, ±phi) and cyclic permutations, in a fixed order.
std::vector<UnitVec> icosahedron_vertices();
/// The 20 faces, counter-clockwise seen from outside.
std::vector<Face> icosahedron_faces();

/// Directions of (±1, ±1, ±1), (0, ±phi, ±1/phi) and cyclic permutations: the dual of
/// icosahedron_vertices(), each corner the direction of an icosahedron face centroid.
std::vector<UnitVec> dodecahedron_vertices();

struct Pentagon {
  UnitVec center;                     // an icosahedron vertex direction
  std::array<std::uint32_t, 5> corners;  // dodecahedron vertex ids, CCW from outside
};
/// One pentagon per icosahedron vertex, in icosahedron_vertices() order.
std::vector<Pentagon> dodecahedron_pentagons();

TriangleMesh make_tetrahedron();
TriangleMesh make_octahedron();
TriangleMesh make_icosahedron();
/// Dodecahedron with every pentagon fan-triangulated from its first corner.
/// A reference solid only: its fan triangles are obtuse and coplanar.
TriangleMesh make_dodecahedron();

}  // namespace geodome
