#include <doctest.h>

#include <cmath>
#include <random>

#include "geodome/solids.hpp"
#include "geodome/sphgeo.hpp"
#include "oracles.hpp"

using namespace geodome;

namespace {

UnitVec u(double x, double y, double z) { return radial_project({x, y, z}); }

}  // namespace

TEST_CASE("arc_length special cases") {
  const UnitVec p = u(0.3, -0.2, 0.9);
  CHECK(std::abs(arc_length(p, p)) < 1e-15);
  CHECK(arc_length(UnitVec::x_axis(), UnitVec::y_axis()) == doctest::Approx(kPi / 2));
  CHECK(arc_length(p, -p) == doctest::Approx(kPi));

  const auto ico = icosahedron_vertices();
  const auto faces = icosahedron_faces();
  const UnitVec a = ico[faces[0][0]];
  const UnitVec b = ico[faces[0][1]];
  CHECK(std::abs(arc_length(a, b) - oracle::kIcosaArc) < 1e-12);
  CHECK(std::abs(arc_length(a, b) - 2.0 * std::asin(oracle::kIcosaEdge / 2.0)) < 1e-12);
}

TEST_CASE("arc_length resolves tiny angles") {
  const double eps = 1e-9;
  const UnitVec q = u(std::cos(eps), std::sin(eps), 0.0);
  CHECK(std::abs(arc_length(UnitVec::x_axis(), q) - eps) < 1e-20);
}

TEST_CASE("chord_length") {
  const UnitVec p = u(1, 2, 3);
  CHECK(chord_length(p, p) == 0.0);
  CHECK(chord_length(p, -p) == doctest::Approx(2.0));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const UnitVec a = radial_project(oracle::random_unit(rng));
    const UnitVec b = radial_project(oracle::random_unit(rng));
    CHECK(std::abs(chord_length(a, b) - 2.0 * std::sin(arc_length(a, b) / 2.0)) < 1e-14);
    const double c = chord_length(a, b);
    CHECK(std::abs(c * c - (2.0 - 2.0 * dot(a, b))) < 1e-13);
  }
}

TEST_CASE("point_on_arc endpoints and midpoint") {
  const UnitVec p = UnitVec::x_axis();
  const UnitVec q = UnitVec::y_axis();
  CHECK(point_on_arc(p, q, 0.0).vec() == p.vec());
  CHECK(point_on_arc(p, q, 1.0).vec() == q.vec());
  const UnitVec mid = point_on_arc(p, q, 0.5);
  CHECK(mid.x() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(mid.y() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(mid.z()) < 1e-15);
}

TEST_CASE("point_on_arc equal subdivision") {
  const UnitVec p = u(0.2, 0.9, -0.1);
  const UnitVec q = u(-0.7, 0.1, 0.6);
  const double whole = arc_length(p, q);
  UnitVec prev = p;
  for (int k = 1; k <= 5; ++k) {
    const UnitVec cur = point_on_arc(p, q, k / 5.0);
    CHECK(std::abs(arc_length(prev, cur) - whole / 5.0) < 1e-13);
    CHECK(std::abs(dot(cur, cross(p, q))) < 1e-12);
    CHECK(std::abs(norm(cur) - 1.0) < 1e-12);
    prev = cur;
  }
}

TEST_CASE("point_on_arc rejects antipodes") {
  const UnitVec p = u(1, 1, 0);
  CHECK_THROWS_AS(point_on_arc(p, -p, 0.5), AntipodalInput);
  // Just inside the cutoff is still accepted.
  const UnitVec q = u(std::cos(kPi - 1e-7), std::sin(kPi - 1e-7), 0.0);
  CHECK_NOTHROW(point_on_arc(UnitVec::x_axis(), q, 0.5));
}

TEST_CASE("radial_project") {
  const UnitVec v = radial_project({2, 0, 0});
  CHECK(v.vec() == Vec3{1, 0, 0});
  const UnitVec w = u(0.3, 0.4, 0.5);
  const UnitVec again = radial_project(w.vec());
  CHECK(distance(w, again) < 1e-15);
  CHECK_THROWS_AS(radial_project({1e-13, 0, 0}), ZeroVector);
  CHECK_THROWS_AS(radial_project({0, 0, 0}), ZeroVector);

  const auto ico = icosahedron_vertices();
  const auto f = icosahedron_faces()[3];
  const Vec3 centroid = (ico[f[0]].vec() + ico[f[1]].vec() + ico[f[2]].vec()) / 3.0;
  CHECK(norm(cross(radial_project(centroid), centroid)) < 1e-12);
}

TEST_CASE("frame_from Gram-Schmidt") {
  const Frame f = frame_from(UnitVec::z_axis(), u(1, 0, 0.5));
  CHECK(distance(f.e1, Vec3{0, 0, 1}) < 1e-15);
  CHECK(distance(f.e2, Vec3{1, 0, 0}) < 1e-15);
  CHECK(distance(f.e3, Vec3{0, 1, 0}) < 1e-15);

  const Frame again = frame_from(f.e1, f.e2);
  CHECK(distance(again.e2, f.e2) < 1e-15);
  CHECK(distance(again.e3, f.e3) < 1e-15);

  CHECK_THROWS_AS(frame_from(UnitVec::z_axis(), UnitVec::z_axis()), DegenerateFrame);
  CHECK_THROWS_AS(frame_from(UnitVec::z_axis(), -UnitVec::z_axis()), DegenerateFrame);
}

TEST_CASE("frame_from orthonormal for random inputs") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const UnitVec a = radial_project(oracle::random_unit(rng));
    const UnitVec b = radial_project(oracle::random_unit(rng));
    const Frame f = frame_from(a, b);
    CHECK(std::abs(dot(f.e1, f.e2)) < 1e-12);
    CHECK(std::abs(dot(f.e1, f.e3)) < 1e-12);
    CHECK(std::abs(dot(f.e2, f.e3)) < 1e-12);
    CHECK(distance(cross(f.e1, f.e2), f.e3) < 1e-12);
    for (const UnitVec& e : {f.e1, f.e2, f.e3}) CHECK(std::abs(norm(e) - 1.0) < 1e-12);
  }
}

TEST_CASE("arc_length symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const UnitVec p = radial_project(oracle::random_unit(rng));
    const UnitVec q = radial_project(oracle::random_unit(rng));
    const UnitVec r = radial_project(oracle::random_unit(rng));
    CHECK(arc_length(p, q) == arc_length(q, p));
    CHECK(arc_length(p, r) <= arc_length(p, q) + arc_length(q, r) + 1e-12);
  }
}

TEST_CASE("rotate_about") {
  const Vec3 v = rotate_about(UnitVec::z_axis(), kPi / 2, {1, 0, 0});
  CHECK(distance(v, Vec3{0, 1, 0}) < 1e-15);
}
