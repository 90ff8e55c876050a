#include "geodome/sphgeo.hpp"

#include <algorithm>

namespace geodome {

namespace {
constexpr double kZeroNorm = 1e-12;
constexpr double kAntipodalMargin = 1e-9;
constexpr double kFrameDegeneracy = 1e-9;
}  // namespace

UnitVec UnitVec::from(const Vec3& v) {
  const double len = norm(v);
  if (!(len > kZeroNorm)) {
    throw ZeroVector("cannot project a vector of norm " + std::to_string(len) +
                     " onto the unit sphere");
  }
  return UnitVec(v / len);
}

UnitVec Frame::to_world(const UnitVec& local) const {
  return UnitVec::from(to_world(local.vec()));
}

double arc_length(const UnitVec& p, const UnitVec& q) {
  return std::atan2(norm(cross(p, q)), dot(p, q));
}

double chord_length(const Vec3& p, const Vec3& q) { return distance(p, q); }

UnitVec point_on_arc(const UnitVec& p, const UnitVec& q, double t) {
  const double theta = arc_length(p, q);
  if (theta > kPi - kAntipodalMargin) {
    throw AntipodalInput("great-circle arc between antipodal points is not unique");
  }
  if (t == 0.0 || theta == 0.0) return p;
  if (t == 1.0) return q;
  // Unit tangent at p pointing along the arc towards q.
  const Vec3 tangent = q.vec() - dot(p, q) * p.vec();
  const Vec3 w = tangent / norm(tangent);
  const double phi = t * theta;
  return UnitVec::from(std::cos(phi) * p.vec() + std::sin(phi) * w);
}

UnitVec radial_project(const Vec3& v) { return UnitVec::from(v); }

Frame frame_from(const UnitVec& apex, const UnitVec& toward) {
  const Vec3 ortho = toward.vec() - dot(toward, apex) * apex.vec();
  if (norm(ortho) < kFrameDegeneracy) {
    throw DegenerateFrame("frame direction is parallel to the apex");
  }
  const UnitVec e2 = UnitVec::from(ortho);
  const UnitVec e3 = UnitVec::from(cross(apex, e2));
  return Frame{apex, e2, e3};
}

}  // namespace geodome
