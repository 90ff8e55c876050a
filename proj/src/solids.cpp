#include "geodome/solids.hpp"

#include <algorithm>
#include <cmath>

namespace geodome {

namespace {

// Cyclic permutations (x,y,z) -> (y,z,x) -> (z,x,y) of every sign choice of
// (0, s1*u, s2*w).
std::vector<Vec3> cyclic_family(double u, double w) {
  std::vector<Vec3> out;
  for (int perm = 0; perm < 3; ++perm) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        const double a = 0.0;
        const double b = s1 * u;
        const double c = s2 * w;
        switch (perm) {
          case 0:
            out.push_back({a, b, c});
            break;
          case 1:
            out.push_back({b, c, a});
            break;
          default:
            out.push_back({c, a, b});
            break;
        }
      }
    }
  }
  return out;
}

std::vector<UnitVec> normalized(const std::vector<Vec3>& pts) {
  std::vector<UnitVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(radial_project(p));
  return out;
}

// Faces spanned by mutually nearest triples; oriented outward.
std::vector<Face> faces_from_edge_length(const std::vector<UnitVec>& v, double edge) {
  const auto close = [&](std::size_t a, std::size_t b) {
    return std::abs(distance(v[a], v[b]) - edge) < 1e-9;
  };
  std::vector<Face> faces;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!close(i, j)) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        if (!close(i, k) || !close(j, k)) continue;
        Face f{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
               static_cast<std::uint32_t>(k)};
        const Vec3 normal = cross(v[j].vec() - v[i].vec(), v[k].vec() - v[i].vec());
        if (dot(normal, v[i].vec()) < 0.0) std::swap(f[1], f[2]);
        faces.push_back(f);
      }
    }
  }
  return faces;
}

TriangleMesh mesh_from(std::string name, const std::vector<UnitVec>& verts,
                       std::vector<Face> faces) {
  std::vector<Vec3> pts;
  pts.reserve(verts.size());
  for (const auto& u : verts) pts.push_back(u.vec());
  return TriangleMesh(std::move(name), 1, std::move(pts), std::move(faces));
}

}  // namespace

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

std::vector<UnitVec> icosahedron_vertices() {
  return normalized(cyclic_family(1.0, golden_ratio()));
}

std::vector<Face> icosahedron_faces() {
  const auto v = icosahedron_vertices();
  return faces_from_edge_length(v, 4.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0)));
}

std::vector<UnitVec> dodecahedron_vertices() {
  std::vector<Vec3> pts;
  for (double x : {1.0, -1.0}) {
    for (double y : {1.0, -1.0}) {
      for (double z : {1.0, -1.0}) pts.push_back({x, y, z});
    }
  }
  const double phi = golden_ratio();
  for (const auto& p : cyclic_family(phi, 1.0 / phi)) pts.push_back(p);
  return normalized(pts);
}

std::vector<Pentagon> dodecahedron_pentagons() {
  const auto centers = icosahedron_vertices();
  const auto verts = dodecahedron_vertices();
  std::vector<Pentagon> out;
  out.reserve(centers.size());
  for (const auto& c : centers) {
    std::vector<std::pair<double, std::uint32_t>> ranked;
    for (std::uint32_t i = 0; i < verts.size(); ++i) ranked.emplace_back(-dot(c, verts[i]), i);
    std::sort(ranked.begin(), ranked.end());

    // Order the five nearest corners counter-clockwise around the center.
    const Frame frame = frame_from(c, verts[ranked[0].second]);
    std::array<std::pair<double, std::uint32_t>, 5> around;
    for (int k = 0; k < 5; ++k) {
      const Vec3& p = verts[ranked[k].second].vec();
      around[k] = {std::atan2(dot(p, frame.e3), dot(p, frame.e2)), ranked[k].second};
    }
    std::sort(around.begin(), around.end());
    Pentagon pent{c, {}};
    for (int k = 0; k < 5; ++k) pent.corners[k] = around[k].second;
    out.push_back(pent);
  }
  return out;
}

TriangleMesh make_tetrahedron() {
  const auto v = normalized({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  return mesh_from("tetrahedron", v, faces_from_edge_length(v, 2.0 * std::sqrt(2.0 / 3.0)));
}

TriangleMesh make_octahedron() {
  const auto v = normalized({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  return mesh_from("octahedron", v, faces_from_edge_length(v, std::sqrt(2.0)));
}

TriangleMesh make_icosahedron() {
  return mesh_from("icosahedron", icosahedron_vertices(), icosahedron_faces());
}

TriangleMesh make_dodecahedron() {
  std::vector<Face> faces;
  for (const auto& p : dodecahedron_pentagons()) {
    for (int k = 1; k < 4; ++k) faces.push_back({p.corners[0], p.corners[k], p.corners[k + 1]});
  }
  return mesh_from("dodecahedron", dodecahedron_vertices(), std::move(faces));
}

}  // namespace geodome
