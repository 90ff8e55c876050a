#include "geodome/kitrick.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "geodome/solids.hpp"

namespace geodome::kitrick {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) {
    throw std::invalid_argument("Kitrick subdivision needs 1 <= n <= " + std::to_string(kMaxN) +
                                ", got " + std::to_string(n));
  }
}

EdgeOrigin origin_of(int copy, const GridIndex& p, const GridIndex& q) {
  // Lower meridian first, then lower parallel.
  const bool swap = (q.i < p.i) || (q.i == p.i && q.j < p.j);
  const GridIndex& s = swap ? q : p;
  const GridIndex& t = swap ? p : q;
  return EdgeOrigin{copy, s.i, s.j, t.i, t.j};
}

}  // namespace

double meridian_longitude(int n, int i) {
  const double c = base_triangle().c;
  return std::atan(std::tan(static_cast<double>(i) / n * c) * std::cos(kAngle36));
}

double parallel_latitude(int n, int j) {
  const double c = base_triangle().c;
  return std::asin(std::sin(static_cast<double>(j) / n * c) * std::sin(kAngle36));
}

UnitVec kitrick_vertex(int n, int i, int j) {
  if (n < 1 || i < 0 || i > n || j < -i || j > i) {
    throw IndexOutOfRange("grid point (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside the triangle for n = " + std::to_string(n));
  }
  const double lon = meridian_longitude(n, i);
  const double lat = parallel_latitude(n, j);
  return radial_project({std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                         std::sin(lat)});
}

CanonicalPatch canonical_triangle_mesh(int n) {
  if (n < 1) throw std::invalid_argument("Kitrick subdivision needs n >= 1");
  CanonicalPatch patch;
  patch.n = n;
  for (int i = 0; i <= n; ++i) {
    for (int j = -i; j <= i; j += 2) patch.points.push_back({0, i, j});
  }
  const auto at = [](int i, int j) { return CanonicalPatch::index_of(i, j); };
  for (int i = 0; i < n; ++i) {
    for (int j = -i; j <= i; j += 2) {
      patch.faces.push_back({at(i, j), at(i + 1, j - 1), at(i + 1, j + 1)});
      patch.edges.push_back({at(i, j), at(i + 1, j - 1), EdgeKind::diagonal});
      patch.edges.push_back({at(i, j), at(i + 1, j + 1), EdgeKind::diagonal});
    }
    for (int j = -i; j <= i - 2; j += 2) {
      patch.faces.push_back({at(i, j), at(i, j + 2), at(i + 1, j + 1)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = -i; j <= i - 2; j += 2) {
      patch.edges.push_back({at(i, j), at(i, j + 2), EdgeKind::meridional});
    }
  }
  return patch;
}

std::vector<Frame> copy_frames() {
  const auto corners = dodecahedron_vertices();
  std::vector<Frame> frames;
  frames.reserve(kCopies);
  for (const auto& pent : dodecahedron_pentagons()) {
    for (int k = 0; k < 5; ++k) {
      const Vec3 mid = corners[pent.corners[k]].vec() + corners[pent.corners[(k + 1) % 5]].vec();
      frames.push_back(frame_from(pent.center, radial_project(mid)));
    }
  }
  return frames;
}

TriangleMesh build_kitrick(int n) {
  check_n(n);
  const CanonicalPatch patch = canonical_triangle_mesh(n);
  std::vector<UnitVec> local;
  local.reserve(patch.points.size());
  for (const auto& p : patch.points) local.push_back(kitrick_vertex(n, p.i, p.j));

  MeshBuilder builder("kitrick", n, kMergeTolerance);
  const auto frames = copy_frames();
  std::vector<std::uint32_t> ids(patch.points.size());
  for (int copy = 0; copy < kCopies; ++copy) {
    const Frame& frame = frames[copy];
    for (std::size_t k = 0; k < patch.points.size(); ++k) {
      const auto& p = patch.points[k];
      ids[k] = builder.add_vertex(frame.to_world(local[k]).vec(), GridLabel{copy, p.i, p.j});
    }
    for (const auto& f : patch.faces) builder.add_face(ids[f[0]], ids[f[1]], ids[f[2]]);
    for (const auto& e : patch.edges) {
      builder.tag_edge(ids[e.a], ids[e.b],
                       EdgeTag{e.kind, origin_of(copy, patch.points[e.a], patch.points[e.b])});
    }
  }

  const std::size_t expected = 30u * static_cast<std::size_t>(n) * n + 2;
  if (builder.vertex_count() != expected) {
    throw DedupMismatch("Kitrick n=" + std::to_string(n) + " merged to " +
                        std::to_string(builder.vertex_count()) + " vertices, expected " +
                        std::to_string(expected));
  }
  return std::move(builder).build();
}

double kitrick_eta_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("Kitrick subdivision needs n >= 1");
  return 2.0 * std::sin(kAngle36) * std::cos(base_triangle().c / (2.0 * n));
}

ExtremalEdgeReport check_extremal_edges(const TriangleMesh& mesh) {
  const auto edges = extract_edges(mesh);
  const auto eta = measure_eta(edges);

  using Key = std::pair<std::uint32_t, std::uint32_t>;
  std::set<Key> longest;
  std::set<Key> shortest;
  for (const auto& e : eta.longest) longest.insert({e.v0, e.v1});
  for (const auto& e : eta.shortest) shortest.insert({e.v0, e.v1});

  std::set<Key> apex_bases;
  std::set<Key> apex_legs;
  std::set<Key> crossings;
  std::set<Key> sides;
  for (const auto& e : edges) {
    if (!e.origin) continue;
    const EdgeOrigin& o = *e.origin;
    const Key key{e.v0, e.v1};
    if (e.kind == EdgeKind::meridional && o.j0 == -1 && o.j1 == 1) {
      crossings.insert(key);
      if (o.i0 == 1) apex_bases.insert(key);
    }
    if (e.kind == EdgeKind::diagonal && std::abs(o.j0) == o.i0 && std::abs(o.j1) == o.i1) {
      sides.insert(key);
      if (o.i0 == 0) apex_legs.insert(key);
    }
  }

  const auto subset = [](const std::set<Key>& a, const std::set<Key>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  ExtremalEdgeReport r;
  r.longest = longest.size();
  r.shortest = shortest.size();
  r.apex_bases = apex_bases.size();
  r.apex_legs = apex_legs.size();
  r.apex_bases_longest = !apex_bases.empty() && subset(apex_bases, longest);
  r.apex_legs_shortest = !apex_legs.empty() && subset(apex_legs, shortest);
  r.equator_crossings = crossings.size();
  r.longest_equals_equator_crossings = longest == crossings;
  r.side_edges = sides.size();
  r.shortest_equals_side_edges = shortest == sides;
  r.longest_only_apex_bases = longest == apex_bases;
  r.shortest_only_apex_legs = shortest == apex_legs;
  return r;
}

}  // namespace geodome::kitrick
