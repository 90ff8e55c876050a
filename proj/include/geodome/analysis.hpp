#pragma once

#include <optional>
#include <string>

#include "geodome/polymesh.hpp"

namespace geodome {

struct UniformityReport {
  std::string construction;
  int n = 0;
  long long m = 0;  // faces
  long long vertices = 0;
  long long edges = 0;
  double min_edge = 0.0;
  double max_edge = 0.0;
  double eta = 0.0;
  std::optional<double> eta_closed_form;  // Kitrick only
  double lower_bound_simple = 0.0;        // 0 when m is odd or < 4
  bool is_convex = false;
  bool all_faces_acute = false;
  double max_norm_deviation = 0.0;
  bool eta_below_2sin36 = false;
};

struct Analysis {
  UniformityReport report;
  ValidationResult validation;
  EtaMeasurement eta;
};

/// Validates and measures a mesh. The closed-form eta is filled in when the
/// mesh's construction is "kitrick" with n >= 1. Never throws for
/// non-manifold input; the report then carries eta = 0.
Analysis analyze(const TriangleMesh& mesh);

}  // namespace geodome
