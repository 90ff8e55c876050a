#include "geodome/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geodome/base_triangle.hpp"

namespace geodome::bounds {

namespace {

double sin36() { return std::sin(kAngle36); }
double cos36() { return std::cos(kAngle36); }
double sq(double x) { return x * x; }

}  // namespace

double two_sin36() { return 2.0 * sin36(); }

double dk_upper_bound(long long k) {
  if (k < 4) throw DomainError("dk_upper_bound needs k >= 4, got " + std::to_string(k));
  const double angle = static_cast<double>(k) / static_cast<double>(k - 2) * kAngle30;
  const double radicand = 4.0 - 1.0 / sq(std::sin(angle));
  if (radicand < 0.0) throw DomainError("negative radicand in dk_upper_bound");
  return std::sqrt(radicand);
}

double refined_lower_bound(double d) { return two_sin36() * std::sqrt(1.0 - d * d / 4.0); }

double lower_bound_simple(long long m) {
  if (m < 4 || m % 2 != 0) {
    throw DomainError("face count must be even and >= 4, got " + std::to_string(m));
  }
  return sin36() / std::sin(kAngle30 * static_cast<double>(m + 4) / static_cast<double>(m));
}

BoundChain bound_chain(long long m) {
  BoundChain chain;
  chain.m = m;
  chain.simple = lower_bound_simple(m);
  chain.k = m / 2 + 2;
  chain.dk_bound = dk_upper_bound(chain.k);
  chain.refined = refined_lower_bound(chain.dk_bound);
  return chain;
}

double f_eta(double eta, double d) {
  if (!(d >= 0.0) || d >= std::sqrt(2.0)) {
    throw DomainError("f_eta needs 0 <= d < sqrt(2), got d = " + std::to_string(d));
  }
  const double inner = 1.0 - sq(eta * d / two_sin36());
  if (inner < 0.0) throw DomainError("f_eta inner radicand is negative");
  return two_sin36() * std::sqrt(0.5 * (1.0 + std::sqrt(inner)));
}

double fixed_point_mu_bisection(double d) {
  if (!(d >= 0.0) || d >= std::sqrt(2.0)) {
    throw DomainError("fixed point needs 0 <= d < sqrt(2)");
  }
  double lo = 0.0;
  double hi = d > 1.0 ? two_sin36() / d : two_sin36();
  // f(0) - 0 > 0 and f(hi) - hi <= 0; f is decreasing so the root is unique.
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (f_eta(mid, d) - mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double fixed_point_mu(double d) {
  if (!(d >= 0.0) || d >= std::sqrt(2.0)) {
    throw DomainError("fixed point needs 0 <= d < sqrt(2), got d = " + std::to_string(d));
  }
  const double mu = refined_lower_bound(d);
  const double check = fixed_point_mu_bisection(d);
  if (std::abs(mu - check) > 1e-12) {
    throw DomainError("closed-form fixed point disagrees with bisection");
  }
  return mu;
}

double half_sphere_min_distance_bound() {
  // 145 x² - 44 x - 92 = 0; discriminant 44² + 4*145*92 = (96 sqrt 6)².
  const double disc = 44.0 * 44.0 + 4.0 * 145.0 * 92.0;
  return (44.0 + std::sqrt(disc)) / (2.0 * 145.0);
}

double half_sphere_printed_closed_form() { return (24.0 * std::sqrt(6.0) + 11.0) / 145.0; }

ContradictionMargin half_sphere_contradiction_margin() {
  ContradictionMargin m;
  m.forced_min_distance = (2.0 / std::sqrt(3.0)) / two_sin36();
  m.lemma_bound = half_sphere_min_distance_bound();
  if (!(m.gap() > 0.0)) throw DomainError("half-sphere case is not excluded");
  return m;
}

ApexTriangle make_apex_triangle(double gamma, double a) {
  if (!(gamma > 0.0 && gamma < kPi) || !(a > 0.0 && a <= kPi / 2.0)) {
    throw DomainError("apex triangle needs 0 < gamma < pi and 0 < a <= pi/2");
  }
  return ApexTriangle{gamma, a, 2.0 * std::asin(std::sin(gamma / 2.0) * std::sin(a))};
}

double apex_chord_ratio(double gamma, double a) {
  const ApexTriangle t = make_apex_triangle(gamma, a);
  const double ratio = 2.0 * std::sin(gamma / 2.0) * std::cos(a / 2.0);
  const double via_base = std::sin(t.c0 / 2.0) / std::sin(a / 2.0);
  if (std::abs(ratio - via_base) > 1e-13 * std::max(1.0, ratio)) {
    throw DomainError("apex chord ratio routes disagree");
  }
  return ratio;
}

double edge_coefficient(EdgeFamily family, double u, double v) {
  const double c = base_triangle().c;
  constexpr double kSlack = 1e-12;
  if (!(v >= -kSlack && v <= u + kSlack && u <= c + kSlack)) {
    throw DomainError("edge coefficient needs 0 <= v <= u <= c");
  }
  const double s2 = sq(sin36());
  const double c2 = sq(cos36());
  const double latitude_term = 1.0 / (1.0 + sq(std::tan(v)) * c2);
  if (family == EdgeFamily::meridional) return 4.0 * s2 * latitude_term;
  const double denom = 1.0 - sq(std::sin(u)) * s2;
  const double cos2_latitude = 1.0 - sq(std::sin(v)) * s2;
  return c2 * cos2_latitude / sq(denom) + s2 * latitude_term;
}

double lambda_constant() {
  const double c = base_triangle().c;
  const double denom = 1.0 - sq(std::sin(c)) * sq(sin36());
  return 0.5 * std::sqrt(sq(cos36()) / sq(denom) + sq(sin36()));
}

}  // namespace geodome::bounds
