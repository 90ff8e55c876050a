#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geodome/sphgeo.hpp"

namespace geodome {

class NonManifold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TooFewPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InvalidMesh : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DedupMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Face = std::array<std::uint32_t, 3>;

enum class EdgeKind { meridional, diagonal, other };
std::string_view to_string(EdgeKind kind);

/// Where a vertex came from: `patch` is the Kitrick triangle copy (0..59)
/// or the icosahedron face (0..19); (i, j) are that construction's grid
/// indices.
struct GridLabel {
  int patch = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const GridLabel&, const GridLabel&) = default;
};

struct EdgeOrigin {
  int patch = 0;
  int i0 = 0;
  int j0 = 0;
  int i1 = 0;
  int j1 = 0;
  friend bool operator==(const EdgeOrigin&, const EdgeOrigin&) = default;
};

struct EdgeTag {
  EdgeKind kind = EdgeKind::other;
  EdgeOrigin origin;
};

constexpr std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

/// Closed triangle mesh with vertices on (or, for rejected inputs, near)
/// the unit sphere. Immutable once built.
class TriangleMesh {
 public:
  TriangleMesh() = default;
  /// Throws InvalidMesh when a face index is out of range or a face repeats
  /// a vertex. Topology (closedness) is checked by extract_edges/validate.
  TriangleMesh(std::string construction, int n, std::vector<Vec3> vertices,
               std::vector<Face> faces,
               std::vector<std::optional<GridLabel>> labels = {},
               std::unordered_map<std::uint64_t, EdgeTag> edge_tags = {});

  const std::string& construction() const { return construction_; }
  int n() const { return n_; }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Either empty or one entry per vertex.
  const std::vector<std::optional<GridLabel>>& labels() const { return labels_; }
  std::optional<EdgeTag> edge_tag(std::uint32_t a, std::uint32_t b) const;
  bool has_edge_tags() const { return !edge_tags_.empty(); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }

 private:
  std::string construction_;
  int n_ = 0;
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<std::optional<GridLabel>> labels_;
  std::unordered_map<std::uint64_t, EdgeTag> edge_tags_;
};

/// Accumulates vertices and faces for one construction. With a positive
/// merge tolerance, vertices whose coordinates agree within it (L-infinity)
/// are merged; numbering follows first insertion, so output is
/// deterministic.
class MeshBuilder {
 public:
  MeshBuilder(std::string construction, int n, double merge_tolerance = 0.0);
  ~MeshBuilder();
  MeshBuilder(MeshBuilder&&) noexcept;
  MeshBuilder& operator=(MeshBuilder&&) noexcept;

  std::uint32_t add_vertex(const Vec3& position,
                           std::optional<GridLabel> label = std::nullopt);
  void add_face(std::uint32_t a, std::uint32_t b, std::uint32_t c);
  /// First tag for a given undirected edge wins.
  void tag_edge(std::uint32_t a, std::uint32_t b, const EdgeTag& tag);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  /// Orients every face so that its normal points away from the origin
  /// (positive dot with the face centroid) and freezes the mesh.
  TriangleMesh build() &&;

 private:
  struct Index;
  std::string construction_;
  int n_;
  double merge_tolerance_;
  std::vector<Vec3> vertices_;
  std::vector<std::optional<GridLabel>> labels_;
  std::vector<Face> faces_;
  std::unordered_map<std::uint64_t, EdgeTag> edge_tags_;
  std::unique_ptr<Index> index_;
};

struct EdgeRecord {
  std::uint32_t v0 = 0;  // v0 < v1
  std::uint32_t v1 = 0;
  double chord = 0.0;
  double arc = 0.0;
  EdgeKind kind = EdgeKind::other;
  std::optional<EdgeOrigin> origin;
};

/// Every undirected edge once, sorted by (v0, v1). Throws NonManifold if an
/// edge is not shared by exactly two faces.
std::vector<EdgeRecord> extract_edges(const TriangleMesh& mesh);

/// Relative tolerance used to group edges tied with the extremes.
inline constexpr double kExtremeTieTolerance = 1e-9;

struct EtaMeasurement {
  double min_edge = 0.0;
  double max_edge = 0.0;
  double eta = 0.0;
  std::vector<EdgeRecord> shortest;  // within kExtremeTieTolerance of min
  std::vector<EdgeRecord> longest;   // within kExtremeTieTolerance of max
  std::size_t edge_count = 0;
};

EtaMeasurement measure_eta(std::span<const EdgeRecord> edges);
EtaMeasurement measure_eta(const TriangleMesh& mesh);

/// min over i != j of |p_i - p_j|. Exact (sweep over x-sorted points).
/// Throws TooFewPoints with fewer than two points.
double min_pairwise_chord(std::span<const Vec3> points);

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kSupportPlaneTolerance = 1e-9;
inline constexpr double kMinPairTolerance = 1e-12;

struct ValidationResult {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;

  double max_norm_deviation = 0.0;
  bool norms_ok = false;

  bool manifold = false;
  bool euler_ok = false;

  double max_face_angle = 0.0;  // radians
  bool all_faces_acute = false;

  /// Largest distance of a vertex beyond a face plane (the plane oriented
  /// away from the origin), clamped below at 0.
  double max_plane_excess = 0.0;
  bool is_convex = false;

  double min_pairwise = 0.0;
  double min_edge = 0.0;
  bool min_pair_is_edge = false;

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every check and reports each failure; never throws.
ValidationResult validate(const TriangleMesh& mesh);

/// Support-plane test on its own: the largest distance by which any vertex
/// lies beyond a face plane on the side away from the origin, or 0. The mesh
/// passes when this is <= kSupportPlaneTolerance.
double max_support_plane_excess(const TriangleMesh& mesh);

}  // namespace geodome
