#pragma once

#include <stdexcept>

namespace geodome::bounds {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 2 sin 36°, the limiting edge ratio.
double two_sin36();

/// Upper bound for the best minimum pairwise chord of k points on S²:
/// sqrt(4 - 1 / sin²(30° k / (k - 2))). This is a bound on the Tammes
/// optimum, never the optimum itself. Requires k >= 4.
double dk_upper_bound(long long k);

/// 2 sin 36° sqrt(1 - d² / 4).
double refined_lower_bound(double d);

/// sin 36° / sin(30° (m + 4) / m) for even m >= 4.
double lower_bound_simple(long long m);

struct BoundChain {
  long long m = 0;
  long long k = 0;  // vertex count m/2 + 2
  double dk_bound = 0.0;
  double refined = 0.0;
  double simple = 0.0;
};
BoundChain bound_chain(long long m);

/// f(eta) = 2 sin 36° sqrt((1 + sqrt(1 - (eta d / (2 sin 36°))²)) / 2).
/// Requires 0 <= d < sqrt(2) and a nonnegative inner radicand.
double f_eta(double eta, double d);

/// The fixed point mu = 2 sin 36° sqrt(1 - d²/4) of f(., d), cross-checked
/// against fixed_point_mu_bisection to 1e-12 (throws DomainError on
/// disagreement or for d outside [0, sqrt(2))).
double fixed_point_mu(double d);

/// Root of f(eta, d) - eta by bisection over [0, min(2 sin 36°, 2 sin 36° / d)],
/// where f - eta changes sign exactly once.
double fixed_point_mu_bisection(double d);

/// The half-sphere Lemma bound: positive root of 145x² - 44x - 92 = 0,
/// i.e. (22 + 48 sqrt 6) / 145, from "zone area >= 12 cap areas".
double half_sphere_min_distance_bound();

/// The closed form as printed alongside that bound, (24 sqrt 6 + 11) / 145.
/// Exactly half of half_sphere_min_distance_bound(); kept for reporting.
double half_sphere_printed_closed_form();

struct ContradictionMargin {
  double forced_min_distance = 0.0;  // (2/sqrt 3) / (2 sin 36°)
  double lemma_bound = 0.0;          // half_sphere_min_distance_bound()
  double gap() const { return forced_min_distance - lemma_bound; }
};
/// Throws DomainError if the gap is not strictly positive.
ContradictionMargin half_sphere_contradiction_margin();

/// Isosceles spherical triangle with apex angle gamma and equal sides a;
/// c0 is its base, sin(c0/2) = sin(gamma/2) sin a.
struct ApexTriangle {
  double gamma = 0.0;
  double a = 0.0;
  double c0 = 0.0;
};
ApexTriangle make_apex_triangle(double gamma, double a);

/// 2 sin(gamma/2) cos(a/2), asserted equal to sin(c0/2) / sin(a/2) to 1e-13.
/// Requires 0 < gamma < pi and 0 < a <= pi/2.
double apex_chord_ratio(double gamma, double a);

enum class EdgeFamily { meridional, diagonal };

/// Coefficient of (c/n)² in the squared length of a subdivided edge at
/// grid position u = (i/n) c, v = (j/n) c, 0 <= v <= u <= c.
///   meridional: 4 sin²36° / (1 + tan²v cos²36°)
///   diagonal:   cos²36° (1 - sin²v sin²36°) / (1 - sin²u sin²36°)²
///               + sin²36° / (1 + tan²v cos²36°)
/// The diagonal form is the squared-length expansion
/// cos²(b_j) (da/di)² + (db/dj)² with b_j the parallel's latitude.
double edge_coefficient(EdgeFamily family, double u, double v);

/// lambda = sqrt(cos²36° / (1 - sin²c sin²36°)² + sin²36°) / 2.
double lambda_constant();

}  // namespace geodome::bounds
