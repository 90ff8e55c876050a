#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace geodome {

// Angles are radians everywhere; degrees only appear in printed reports.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

class AntipodalInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class ZeroVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class DegenerateFrame : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// A direction on the unit sphere S². The only ways to obtain one are
/// radial projection of a nonzero vector or the canonical axes, so the
/// norm is 1 to within rounding.
class UnitVec {
 public:
  constexpr UnitVec() = default;  // +x

  static UnitVec x_axis() { return UnitVec(Vec3{1, 0, 0}); }
  static UnitVec y_axis() { return UnitVec(Vec3{0, 1, 0}); }
  static UnitVec z_axis() { return UnitVec(Vec3{0, 0, 1}); }

  /// v / |v|; throws ZeroVector when |v| <= 1e-12.
  static UnitVec from(const Vec3& v);

  constexpr const Vec3& vec() const { return v_; }
  constexpr operator const Vec3&() const { return v_; }  // NOLINT
  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }

  UnitVec operator-() const { return UnitVec(-v_); }

 private:
  explicit constexpr UnitVec(const Vec3& v) : v_(v) {}
  Vec3 v_{1.0, 0.0, 0.0};
};

/// Orthonormal right-handed triple; maps canonical coordinates (x, y, z)
/// to x*e1 + y*e2 + z*e3.
struct Frame {
  UnitVec e1;
  UnitVec e2;
  UnitVec e3;

  Vec3 to_world(const Vec3& local) const {
    return local.x * e1.vec() + local.y * e2.vec() + local.z * e3.vec();
  }
  UnitVec to_world(const UnitVec& local) const;
};

/// Great-circle angle in [0, pi], atan2(|p x q|, p.q) form.
double arc_length(const UnitVec& p, const UnitVec& q);

/// Euclidean |p - q| (equals 2 sin(arc/2) for unit inputs).
double chord_length(const Vec3& p, const Vec3& q);

/// Point at fraction t of the shorter great-circle arc from p to q.
/// Throws AntipodalInput when the arc is within 1e-9 of pi.
UnitVec point_on_arc(const UnitVec& p, const UnitVec& q, double t);

/// v / |v|; throws ZeroVector when |v| <= 1e-12.
UnitVec radial_project(const Vec3& v);

/// e1 = apex, e2 = unit component of `toward` orthogonal to apex,
/// e3 = e1 x e2. Throws DegenerateFrame if that component is < 1e-9.
Frame frame_from(const UnitVec& apex, const UnitVec& toward);

/// Rotation of v by `angle` radians about `axis` (right-hand rule).
inline Vec3 rotate_about(const UnitVec& axis, double angle, const Vec3& v) {
  const Vec3& k = axis.vec();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return c * v + s * cross(k, v) + (dot(k, v) * (1.0 - c)) * k;
}

}  // namespace geodome
