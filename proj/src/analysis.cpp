#include "geodome/analysis.hpp"

#include "geodome/bounds.hpp"
#include "geodome/kitrick.hpp"

namespace geodome {

Analysis analyze(const TriangleMesh& mesh) {
  Analysis out;
  out.validation = validate(mesh);
  if (out.validation.manifold) out.eta = measure_eta(mesh);

  UniformityReport& r = out.report;
  r.construction = mesh.construction();
  r.n = mesh.n();
  r.m = static_cast<long long>(mesh.face_count());
  r.vertices = static_cast<long long>(mesh.vertex_count());
  r.edges = static_cast<long long>(out.validation.edges);
  r.min_edge = out.eta.min_edge;
  r.max_edge = out.eta.max_edge;
  r.eta = out.eta.eta;
  if (mesh.construction() == "kitrick" && mesh.n() >= 1) {
    r.eta_closed_form = kitrick::kitrick_eta_closed_form(mesh.n());
  }
  if (r.m >= 4 && r.m % 2 == 0) r.lower_bound_simple = bounds::lower_bound_simple(r.m);
  r.is_convex = out.validation.is_convex;
  r.all_faces_acute = out.validation.all_faces_acute;
  r.max_norm_deviation = out.validation.max_norm_deviation;
  r.eta_below_2sin36 = out.validation.manifold && r.eta < bounds::two_sin36();
  return out;
}

}  // namespace geodome
