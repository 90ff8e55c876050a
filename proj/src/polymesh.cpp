#include "geodome/polymesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "point_grid.hpp"

namespace geodome {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::meridional:
      return "meridional";
    case EdgeKind::diagonal:
      return "diagonal";
    case EdgeKind::other:
      break;
  }
  return "other";
}

// ---------------------------------------------------------------------------
// TriangleMesh

TriangleMesh::TriangleMesh(std::string construction, int n, std::vector<Vec3> vertices,
                           std::vector<Face> faces,
                           std::vector<std::optional<GridLabel>> labels,
                           std::unordered_map<std::uint64_t, EdgeTag> edge_tags)
    : construction_(std::move(construction)),
      n_(n),
      vertices_(std::move(vertices)),
      faces_(std::move(faces)),
      labels_(std::move(labels)),
      edge_tags_(std::move(edge_tags)) {
  const auto count = vertices_.size();
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    for (auto idx : face) {
      if (idx >= count) {
        throw InvalidMesh("face " + std::to_string(f) + " references vertex " +
                          std::to_string(idx) + " of " + std::to_string(count));
      }
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      throw InvalidMesh("face " + std::to_string(f) + " repeats a vertex");
    }
  }
  if (!labels_.empty() && labels_.size() != count) {
    throw InvalidMesh("vertex label count does not match vertex count");
  }
}

std::optional<EdgeTag> TriangleMesh::edge_tag(std::uint32_t a, std::uint32_t b) const {
  const auto it = edge_tags_.find(edge_key(a, b));
  if (it == edge_tags_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// MeshBuilder

struct MeshBuilder::Index {
  detail::PointGrid grid;
};

MeshBuilder::MeshBuilder(std::string construction, int n, double merge_tolerance)
    : construction_(std::move(construction)), n_(n), merge_tolerance_(merge_tolerance) {
  if (merge_tolerance_ > 0.0) {
    // Cells much larger than the tolerance keep neighbour scans to one cell
    // in almost all cases.
    index_ = std::make_unique<Index>(Index{detail::PointGrid(1e-6)});
  }
}

MeshBuilder::~MeshBuilder() = default;
MeshBuilder::MeshBuilder(MeshBuilder&&) noexcept = default;
MeshBuilder& MeshBuilder::operator=(MeshBuilder&&) noexcept = default;

std::uint32_t MeshBuilder::add_vertex(const Vec3& position, std::optional<GridLabel> label) {
  if (index_) {
    std::optional<std::uint32_t> found;
    index_->grid.for_each_near(position, merge_tolerance_, [&](std::uint32_t id) {
      if (found) return;
      const Vec3& q = vertices_[id];
      if (std::abs(q.x - position.x) <= merge_tolerance_ &&
          std::abs(q.y - position.y) <= merge_tolerance_ &&
          std::abs(q.z - position.z) <= merge_tolerance_) {
        found = id;
      }
    });
    if (found) return *found;
  }
  const auto id = static_cast<std::uint32_t>(vertices_.size());
  vertices_.push_back(position);
  labels_.push_back(label);
  if (index_) index_->grid.insert(position, id);
  return id;
}

void MeshBuilder::add_face(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  faces_.push_back({a, b, c});
}

void MeshBuilder::tag_edge(std::uint32_t a, std::uint32_t b, const EdgeTag& tag) {
  edge_tags_.try_emplace(edge_key(a, b), tag);
}

TriangleMesh MeshBuilder::build() && {
  for (Face& f : faces_) {
    const Vec3& a = vertices_[f[0]];
    const Vec3& b = vertices_[f[1]];
    const Vec3& c = vertices_[f[2]];
    const Vec3 normal = cross(b - a, c - a);
    if (dot(normal, a + b + c) < 0.0) std::swap(f[1], f[2]);
  }
  return TriangleMesh(std::move(construction_), n_, std::move(vertices_), std::move(faces_),
                      std::move(labels_), std::move(edge_tags_));
}

// ---------------------------------------------------------------------------
// Edges and eta

std::vector<EdgeRecord> extract_edges(const TriangleMesh& mesh) {
  std::vector<std::uint64_t> keys;
  keys.reserve(mesh.face_count() * 3);
  for (const Face& f : mesh.faces()) {
    keys.push_back(edge_key(f[0], f[1]));
    keys.push_back(edge_key(f[1], f[2]));
    keys.push_back(edge_key(f[2], f[0]));
  }
  std::sort(keys.begin(), keys.end());

  const auto& verts = mesh.vertices();
  std::vector<EdgeRecord> edges;
  edges.reserve(keys.size() / 2);
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    const auto v0 = static_cast<std::uint32_t>(keys[i] >> 32);
    const auto v1 = static_cast<std::uint32_t>(keys[i] & 0xffffffffu);
    if (j - i != 2) {
      std::ostringstream msg;
      msg << "edge (" << v0 << ", " << v1 << ") is shared by " << (j - i)
          << " faces, expected 2";
      throw NonManifold(msg.str());
    }
    EdgeRecord e;
    e.v0 = v0;
    e.v1 = v1;
    e.chord = chord_length(verts[v0], verts[v1]);
    e.arc = std::atan2(norm(cross(verts[v0], verts[v1])), dot(verts[v0], verts[v1]));
    if (auto tag = mesh.edge_tag(v0, v1)) {
      e.kind = tag->kind;
      e.origin = tag->origin;
    }
    edges.push_back(e);
    i = j;
  }
  return edges;
}

EtaMeasurement measure_eta(std::span<const EdgeRecord> edges) {
  EtaMeasurement m;
  m.edge_count = edges.size();
  if (edges.empty()) return m;
  m.min_edge = std::numeric_limits<double>::infinity();
  m.max_edge = 0.0;
  for (const auto& e : edges) {
    m.min_edge = std::min(m.min_edge, e.chord);
    m.max_edge = std::max(m.max_edge, e.chord);
  }
  m.eta = m.max_edge / m.min_edge;
  for (const auto& e : edges) {
    if (e.chord <= m.min_edge * (1.0 + kExtremeTieTolerance)) m.shortest.push_back(e);
    if (e.chord >= m.max_edge * (1.0 - kExtremeTieTolerance)) m.longest.push_back(e);
  }
  return m;
}

EtaMeasurement measure_eta(const TriangleMesh& mesh) {
  const auto edges = extract_edges(mesh);
  return measure_eta(edges);
}

double min_pairwise_chord(std::span<const Vec3> points) {
  if (points.size() < 2) {
    throw TooFewPoints("minimum pairwise distance needs at least two points");
  }
  std::vector<Vec3> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Vec3& a, const Vec3& b) { return a.x < b.x; });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[j].x - sorted[i].x >= best) break;
      best = std::min(best, distance(sorted[i], sorted[j]));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Validation

double max_support_plane_excess(const TriangleMesh& mesh) {
  const auto& verts = mesh.vertices();
  if (verts.empty() || mesh.faces().empty()) return 0.0;

  double max_radius = 0.0;
  for (const auto& v : verts) max_radius = std::max(max_radius, norm(v));

  // Index vertex directions: a vertex can only lie beyond a face plane at
  // distance h if its direction is within arccos(h / max_radius) of the
  // plane normal.
  const double cell = std::clamp(3.5 / std::sqrt(static_cast<double>(verts.size())), 1e-3, 0.5);
  detail::PointGrid directions(cell);
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    // A vertex at the origin is never beyond a plane oriented away from it.
    const double len = norm(verts[i]);
    if (len > 0.0) directions.insert(verts[i] / len, i);
  }

  double excess = 0.0;
  for (const Face& f : mesh.faces()) {
    const Vec3& a = verts[f[0]];
    const Vec3& b = verts[f[1]];
    const Vec3& c = verts[f[2]];
    Vec3 normal = cross(b - a, c - a);
    const double len = norm(normal);
    if (!(len > 0.0)) {
      excess = std::numeric_limits<double>::infinity();
      continue;
    }
    normal = normal / len;
    double h = dot(normal, a);
    if (h < 0.0) {
      normal = -normal;
      h = -h;
    }
    const double cos_cap = std::min(1.0, h / max_radius);
    const double radius = std::sqrt(std::max(0.0, 2.0 - 2.0 * cos_cap)) + 1e-9;
    directions.for_each_near(normal, radius, [&](std::uint32_t id) {
      if (id == f[0] || id == f[1] || id == f[2]) return;
      excess = std::max(excess, dot(normal, verts[id]) - h);
    });
  }
  return excess;
}

ValidationResult validate(const TriangleMesh& mesh) {
  ValidationResult r;
  const auto& verts = mesh.vertices();
  r.vertices = verts.size();
  r.faces = mesh.face_count();

  std::ostringstream msg;
  msg.precision(17);

  // (a) vertices on the unit sphere
  for (const auto& v : verts) {
    r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(norm(v) - 1.0));
  }
  r.norms_ok = r.max_norm_deviation <= kNormTolerance;
  if (!r.norms_ok) {
    msg.str("");
    msg << "vertex norm deviates from 1 by " << r.max_norm_deviation;
    r.failures.push_back(msg.str());
  }

  // (b) closed manifold with Euler characteristic 2
  std::vector<EdgeRecord> edges;
  try {
    edges = extract_edges(mesh);
    r.manifold = true;
  } catch (const NonManifold& e) {
    r.failures.push_back(e.what());
  }
  r.edges = edges.size();
  if (r.manifold) {
    const auto V = static_cast<long long>(r.vertices);
    const auto E = static_cast<long long>(r.edges);
    const auto F = static_cast<long long>(r.faces);
    r.euler_ok = (V - E + F == 2) && (2 * V == F + 4);
    if (!r.euler_ok) {
      msg.str("");
      msg << "Euler counts fail: V=" << V << " E=" << E << " F=" << F;
      r.failures.push_back(msg.str());
    }
  }

  // (c) acute faces
  r.all_faces_acute = true;
  for (const Face& f : mesh.faces()) {
    for (int k = 0; k < 3; ++k) {
      const Vec3& p = verts[f[k]];
      const Vec3 u = verts[f[(k + 1) % 3]] - p;
      const Vec3 w = verts[f[(k + 2) % 3]] - p;
      const double d = dot(u, w);
      r.max_face_angle = std::max(r.max_face_angle, std::atan2(norm(cross(u, w)), d));
      if (!(d > 0.0)) r.all_faces_acute = false;
    }
  }
  if (!r.all_faces_acute) {
    msg.str("");
    msg << "non-acute face, largest angle " << rad_to_deg(r.max_face_angle) << " deg";
    r.failures.push_back(msg.str());
  }

  // (d) support planes
  r.max_plane_excess = max_support_plane_excess(mesh);
  r.is_convex = r.max_plane_excess <= kSupportPlaneTolerance;
  if (!r.is_convex) {
    msg.str("");
    msg << "support-plane test fails, vertex beyond a face plane by " << r.max_plane_excess;
    r.failures.push_back(msg.str());
  }

  // (e) the closest vertex pair is an edge
  if (!edges.empty() && verts.size() >= 2) {
    r.min_pairwise = min_pairwise_chord(verts);
    r.min_edge = std::numeric_limits<double>::infinity();
    for (const auto& e : edges) r.min_edge = std::min(r.min_edge, e.chord);
    r.min_pair_is_edge = std::abs(r.min_pairwise - r.min_edge) <= kMinPairTolerance;
    if (!r.min_pair_is_edge) {
      msg.str("");
      msg << "closest vertex pair " << r.min_pairwise << " is shorter than the shortest edge "
          << r.min_edge;
      r.failures.push_back(msg.str());
    }
  }
  return r;
}

}  // namespace geodome
