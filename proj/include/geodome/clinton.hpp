#pragma once

#include <array>
#include <vector>

#include "geodome/polymesh.hpp"
#include "geodome/sphgeo.hpp"

// Clinton's polyhedra on the inscribed icosahedron, m = 20 n² faces.
//
// Each spherical icosahedron edge is divided into n equal arcs and the
// division points are projected back onto the icosahedron faces, giving
// A_i, B_j, C_k on the sides a, b, c of a face (V0, V1, V2):
//   side a runs V1 -> V2, side b runs V2 -> V0, side c runs V0 -> V1,
// index 0 at the start of the side and n at its end. A point P' of the
// regular n² grid of the face has integer barycentric coordinates (p,q,r);
// it lies on the grid lines p, q, r = const, parallel to sides a, b, c.
// Moving those lines to pass through the actual division points bounds a
// small equilateral triangle T(P'). Its centre, projected to the sphere,
// is a vertex of variant I; variant II projects T(P') to the sphere, takes
// the incenter of the resulting planar triangle and projects that.
namespace geodome::clinton {

inline constexpr int kMaxN = 64;

enum class Variant { centroid, incenter };  // I (points Q), II (points R)

/// Which parallel through each division point builds T(P').
///   primary: through A_i parallel to b, B_j parallel to c, C_k parallel to a
///   mirror:  through A_i parallel to c, B_j parallel to a, C_k parallel to b
/// The parallel to b through A_i is the parallel to b through C_(n-i), and
/// likewise for the other sides, so both pick the same three lines and
/// build the same polyhedron.
enum class ParallelMatching { primary, mirror };

enum class PointKind { vertex, side, interior };

struct FaceGridPoint {
  int face = 0;
  int p = 0;
  int q = 0;
  int r = 0;

  /// vertex iff two coordinates are 0, side iff exactly one is.
  PointKind kind() const;
  /// The point p V0 + q V1 + r V2 over n on the face plane.
  Vec3 position(const std::array<Vec3, 3>& corners) const;
};

/// The face of the inscribed icosahedron with its plane x . normal = offset.
struct IcosaFace {
  std::array<std::uint32_t, 3> ids;  // icosahedron vertex ids, CCW from outside
  std::array<Vec3, 3> corners;
  Vec3 normal;
  double offset = 0.0;

  /// Intersection of the ray through `direction` with the face plane.
  Vec3 to_plane(const UnitVec& direction) const;
};
IcosaFace icosa_face(int face);

/// Division point t of n on the spherical icosahedron edge u -> v. Computed
/// from the lower vertex id so both faces of an edge get identical points.
UnitVec edge_division_point(std::uint32_t u, std::uint32_t v, int t, int n);

struct SidePoints {
  std::vector<Vec3> a;  // A_1 .. A_{n-1}
  std::vector<Vec3> b;  // B_1 .. B_{n-1}
  std::vector<Vec3> c;  // C_1 .. C_{n-1}
};
SidePoints face_side_points(int face, int n);

/// T(P') as three points on the face plane. Degenerate (three equal points)
/// for face vertices and side points.
std::array<Vec3, 3> t_triangle(int face, int n, const FaceGridPoint& point,
                               ParallelMatching matching = ParallelMatching::primary);

/// Incenter of a planar triangle (vertices weighted by opposite side
/// lengths); a zero-size triangle gives its (single) vertex.
Vec3 incenter(const std::array<Vec3, 3>& tri);

/// F = 20n², V = 10n² + 2, E = 30n². Throws std::invalid_argument unless
/// 1 <= n <= kMaxN, DedupMismatch on a vertex count mismatch.
TriangleMesh build_clinton(int n, Variant variant,
                           ParallelMatching matching = ParallelMatching::primary);
inline TriangleMesh build_clinton_I(int n) { return build_clinton(n, Variant::centroid); }
inline TriangleMesh build_clinton_II(int n) { return build_clinton(n, Variant::incenter); }

}  // namespace geodome::clinton
