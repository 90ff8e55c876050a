#include "geodome/clinton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "geodome/solids.hpp"

namespace geodome::clinton {

namespace {

const std::vector<UnitVec>& ico_vertices() {
  static const auto v = icosahedron_vertices();
  return v;
}

const std::vector<Face>& ico_faces() {
  static const auto f = icosahedron_faces();
  return f;
}

// Intersection of the coplanar lines p1 + s d1 and p2 + t d2.
Vec3 intersect(const Vec3& p1, const Vec3& d1, const Vec3& p2, const Vec3& d2) {
  const Vec3 n = cross(d1, d2);
  const double s = dot(cross(p2 - p1, d2), n) / dot(n, n);
  return p1 + s * d1;
}

// Division points of the three sides of one face, projected to its plane,
// indices 0..n (the endpoints are the face corners).
struct FaceGeometry {
  IcosaFace face;
  std::vector<Vec3> a;
  std::vector<Vec3> b;
  std::vector<Vec3> c;

  FaceGeometry(int face_id, int n) : face(icosa_face(face_id)) {
    const auto [v0, v1, v2] = face.ids;
    for (int t = 0; t <= n; ++t) {
      a.push_back(side_point(v1, v2, t, n, 1, 2));
      b.push_back(side_point(v2, v0, t, n, 2, 0));
      c.push_back(side_point(v0, v1, t, n, 0, 1));
    }
  }

  Vec3 side_point(std::uint32_t u, std::uint32_t v, int t, int n, int cu, int cv) const {
    // Corners exactly, so degenerate lines coincide with the face sides.
    if (t == 0) return face.corners[cu];
    if (t == n) return face.corners[cv];
    return face.to_plane(edge_division_point(u, v, t, n));
  }

  std::array<Vec3, 3> t_triangle(int n, const FaceGridPoint& pt, ParallelMatching matching) const {
    const auto& corners = face.corners;
    const Vec3 dir_a = corners[2] - corners[1];
    const Vec3 dir_b = corners[0] - corners[2];
    const Vec3 dir_c = corners[1] - corners[0];
    Vec3 la, lb, lc;     // anchor points on sides a, b, c
    Vec3 da, db, dc;     // directions of the lines through them
    if (matching == ParallelMatching::primary) {
      la = a[n - pt.q];
      lb = b[n - pt.r];
      lc = c[n - pt.p];
      da = dir_b;
      db = dir_c;
      dc = dir_a;
    } else {
      la = a[pt.r];
      lb = b[pt.p];
      lc = c[pt.q];
      da = dir_c;
      db = dir_a;
      dc = dir_b;
    }
    return {intersect(la, da, lb, db), intersect(lb, db, lc, dc), intersect(lc, dc, la, da)};
  }
};

void check_n(int n) {
  if (n < 1 || n > kMaxN) {
    throw std::invalid_argument("Clinton subdivision needs 1 <= n <= " + std::to_string(kMaxN) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

PointKind FaceGridPoint::kind() const {
  const int zeros = (p == 0) + (q == 0) + (r == 0);
  if (zeros >= 2) return PointKind::vertex;
  if (zeros == 1) return PointKind::side;
  return PointKind::interior;
}

Vec3 FaceGridPoint::position(const std::array<Vec3, 3>& corners) const {
  const double n = p + q + r;
  return (p * corners[0] + q * corners[1] + r * corners[2]) / n;
}

Vec3 IcosaFace::to_plane(const UnitVec& direction) const {
  return direction.vec() * (offset / dot(direction, normal));
}

IcosaFace icosa_face(int face) {
  const auto& faces = ico_faces();
  if (face < 0 || face >= static_cast<int>(faces.size())) {
    throw std::out_of_range("icosahedron face id " + std::to_string(face));
  }
  const auto& verts = ico_vertices();
  IcosaFace f;
  f.ids = faces[face];
  for (int k = 0; k < 3; ++k) f.corners[k] = verts[f.ids[k]].vec();
  const Vec3 nrm = cross(f.corners[1] - f.corners[0], f.corners[2] - f.corners[0]);
  f.normal = nrm / norm(nrm);
  f.offset = dot(f.normal, f.corners[0] + f.corners[1] + f.corners[2]) / 3.0;
  return f;
}

UnitVec edge_division_point(std::uint32_t u, std::uint32_t v, int t, int n) {
  const auto& verts = ico_vertices();
  if (u < v) return point_on_arc(verts[u], verts[v], static_cast<double>(t) / n);
  return point_on_arc(verts[v], verts[u], static_cast<double>(n - t) / n);
}

SidePoints face_side_points(int face, int n) {
  if (n < 1) throw std::invalid_argument("Clinton subdivision needs n >= 1");
  const FaceGeometry geo(face, n);
  SidePoints out;
  for (int t = 1; t < n; ++t) {
    out.a.push_back(geo.a[t]);
    out.b.push_back(geo.b[t]);
    out.c.push_back(geo.c[t]);
  }
  return out;
}

std::array<Vec3, 3> t_triangle(int face, int n, const FaceGridPoint& point,
                               ParallelMatching matching) {
  if (point.p < 0 || point.q < 0 || point.r < 0 || point.p + point.q + point.r != n) {
    throw std::invalid_argument("grid point is not on the n-subdivision of the face");
  }
  const FaceGeometry geo(face, n);
  switch (point.kind()) {
    case PointKind::vertex: {
      const Vec3 v = point.position(geo.face.corners);
      return {v, v, v};
    }
    case PointKind::side: {
      Vec3 v;
      if (point.p == 0) {
        v = geo.a[point.r];
      } else if (point.q == 0) {
        v = geo.b[point.p];
      } else {
        v = geo.c[point.q];
      }
      return {v, v, v};
    }
    case PointKind::interior:
      break;
  }
  return geo.t_triangle(n, point, matching);
}

Vec3 incenter(const std::array<Vec3, 3>& tri) {
  const double wa = distance(tri[1], tri[2]);
  const double wb = distance(tri[2], tri[0]);
  const double wc = distance(tri[0], tri[1]);
  const double perimeter = wa + wb + wc;
  if (!(perimeter > 0.0)) return tri[0];
  return (wa * tri[0] + wb * tri[1] + wc * tri[2]) / perimeter;
}

TriangleMesh build_clinton(int n, Variant variant, ParallelMatching matching) {
  check_n(n);
  const auto& verts = ico_vertices();
  const auto& faces = ico_faces();
  const char* name = variant == Variant::centroid ? "clinton1" : "clinton2";
  MeshBuilder builder(name, n);

  // Shared points are created once: icosahedron vertices, then the division
  // points of each undirected edge, then face interiors.
  for (std::uint32_t v = 0; v < verts.size(); ++v) builder.add_vertex(verts[v].vec());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> edge_ids;
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> undirected;
    for (const auto& f : faces) {
      for (int k = 0; k < 3; ++k) {
        undirected.emplace_back(std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3]));
      }
    }
    std::sort(undirected.begin(), undirected.end());
    undirected.erase(std::unique(undirected.begin(), undirected.end()), undirected.end());
    for (const auto& [u, v] : undirected) {
      auto& ids = edge_ids[{u, v}];
      ids.push_back(u);
      for (int t = 1; t < n; ++t) {
        ids.push_back(builder.add_vertex(edge_division_point(u, v, t, n).vec()));
      }
      ids.push_back(v);
    }
  }
  // Mesh id of division point t along the directed edge u -> v.
  const auto on_edge = [&](std::uint32_t u, std::uint32_t v, int t) {
    if (u < v) return edge_ids.at({u, v})[t];
    return edge_ids.at({v, u})[n - t];
  };

  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const FaceGeometry geo(fi, n);
    const auto [v0, v1, v2] = geo.face.ids;
    // ids[q][r] for the grid point (n - q - r, q, r)
    std::vector<std::vector<std::uint32_t>> ids(n + 1);
    for (int q = 0; q <= n; ++q) {
      ids[q].resize(n + 1 - q);
      for (int r = 0; q + r <= n; ++r) {
        const FaceGridPoint pt{fi, n - q - r, q, r};
        std::uint32_t id = 0;
        if (pt.kind() != PointKind::interior) {
          if (pt.p == 0) {
            id = on_edge(v1, v2, pt.r);
          } else if (pt.q == 0) {
            id = on_edge(v2, v0, pt.p);
          } else {
            id = on_edge(v0, v1, pt.q);
          }
        } else {
          const auto tri = geo.t_triangle(n, pt, matching);
          Vec3 position;
          if (variant == Variant::centroid) {
            position = radial_project((tri[0] + tri[1] + tri[2]) / 3.0).vec();
          } else {
            const std::array<Vec3, 3> projected{radial_project(tri[0]).vec(),
                                                radial_project(tri[1]).vec(),
                                                radial_project(tri[2]).vec()};
            position = radial_project(incenter(projected)).vec();
          }
          id = builder.add_vertex(position, GridLabel{fi, q, r});
        }
        ids[q][r] = id;
      }
    }
    for (int q = 0; q < n; ++q) {
      for (int r = 0; q + r < n; ++r) {
        builder.add_face(ids[q][r], ids[q + 1][r], ids[q][r + 1]);
        if (q + r + 2 <= n) builder.add_face(ids[q + 1][r], ids[q + 1][r + 1], ids[q][r + 1]);
      }
    }
  }

  const std::size_t expected = 10u * static_cast<std::size_t>(n) * n + 2;
  if (builder.vertex_count() != expected) {
    throw DedupMismatch(std::string(name) + " n=" + std::to_string(n) + " has " +
                        std::to_string(builder.vertex_count()) + " vertices, expected " +
                        std::to_string(expected));
  }
  return std::move(builder).build();
}

}  // namespace geodome::clinton
