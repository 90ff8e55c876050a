#include "geodome/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "geodome/analysis.hpp"
#include "geodome/base_triangle.hpp"
#include "geodome/bounds.hpp"
#include "geodome/clinton.hpp"
#include "geodome/kitrick.hpp"
#include "geodome/meshio.hpp"
#include "geodome/solids.hpp"

namespace geodome::cli {

namespace {

using meshio::format_number;

std::string num(double v, int digits = 12) { return format_number(v, digits); }

int require_n(const CommandConfig& config) {
  if (!config.n) throw UsageError("--n is required");
  if (*config.n < 1 || *config.n > kMaxN) {
    throw UsageError("--n must be in 1.." + std::to_string(kMaxN) + ", got " +
                     std::to_string(*config.n));
  }
  return *config.n;
}

int require_n_max(const CommandConfig& config) {
  if (config.n_max < 1 || config.n_max > kMaxTableN) {
    throw UsageError("--n-max must be in 1.." + std::to_string(kMaxTableN) + ", got " +
                     std::to_string(config.n_max));
  }
  return config.n_max;
}

bool fixed_size(const std::string& name) {
  return name == "icosahedron" || name == "dodecahedron";
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw meshio::IoError("cannot open " + path + " for writing");
  return file;
}

void write_summary(const std::string& name, int n, const TriangleMesh& mesh,
                   const EtaMeasurement& eta, std::ostream& out) {
  out << name << " n=" << n << ": m=" << mesh.face_count() << " V=" << mesh.vertex_count()
      << " E=" << eta.edge_count << " eta=" << num(eta.eta) << " min_edge=" << num(eta.min_edge)
      << " max_edge=" << num(eta.max_edge) << '\n';
}

// -------------------------------------------------------------------------
// verification helpers

Check make_check(std::string group, std::string name, bool passed, std::string detail,
                 bool hard = true) {
  return Check{std::move(group), std::move(name), passed, hard, std::move(detail)};
}

void kitrick_checks(int n, std::vector<Check>& checks) {
  const std::string group = "kitrick n=" + std::to_string(n);
  const TriangleMesh mesh = kitrick::build_kitrick(n);
  const Analysis a = analyze(mesh);
  const long long nn = static_cast<long long>(n) * n;
  const auto& r = a.report;

  checks.push_back(make_check(group, "counts",
                              r.m == 60 * nn && r.vertices == 30 * nn + 2 && r.edges == 90 * nn,
                              "F=" + std::to_string(r.m) + " V=" + std::to_string(r.vertices) +
                                  " E=" + std::to_string(r.edges)));
  std::string failures;
  for (const auto& f : a.validation.failures) failures += f + "; ";
  checks.push_back(make_check(group, "validate", a.validation.ok(),
                              failures.empty() ? "all checks pass" : failures));
  const double closed = *r.eta_closed_form;
  checks.push_back(make_check(group, "eta equals closed form",
                              std::abs(r.eta - closed) <= 1e-9,
                              "measured " + num(r.eta) + " closed " + num(closed) + " diff " +
                                  num(std::abs(r.eta - closed), 3)));
  checks.push_back(make_check(group, "eta < 2 sin 36", r.eta < bounds::two_sin36(),
                              num(r.eta) + " < " + num(bounds::two_sin36())));
  checks.push_back(make_check(group, "sandwich", r.lower_bound_simple <= r.eta,
                              num(r.lower_bound_simple) + " <= " + num(r.eta) + " <= " +
                                  num(bounds::two_sin36())));
  checks.push_back(make_check(
      group, "convexity chain",
      r.eta < std::sqrt(2.0) && r.all_faces_acute && r.is_convex,
      "eta<sqrt2 " + std::string(r.eta < std::sqrt(2.0) ? "yes" : "no") + ", acute " +
          (r.all_faces_acute ? "yes" : "no") + ", support planes " + (r.is_convex ? "yes" : "no")));
  const auto ext = kitrick::check_extremal_edges(mesh);
  checks.push_back(make_check(
      group, "extremal edges",
      ext.apex_bases_longest && ext.apex_legs_shortest && ext.longest_equals_equator_crossings &&
          ext.shortest_equals_side_edges,
      "longest " + std::to_string(ext.longest) + " (apex bases " +
          std::to_string(ext.apex_bases) + "), shortest " + std::to_string(ext.shortest) +
          " (apex legs " + std::to_string(ext.apex_legs) + ")"));
}

void clinton_checks(int n, clinton::Variant variant, std::vector<Check>& checks) {
  const std::string name = variant == clinton::Variant::centroid ? "clinton1" : "clinton2";
  const std::string group = name + " n=" + std::to_string(n);
  const TriangleMesh mesh = clinton::build_clinton(n, variant);
  const Analysis a = analyze(mesh);
  const long long nn = static_cast<long long>(n) * n;
  const auto& r = a.report;
  checks.push_back(make_check(group, "counts",
                              r.m == 20 * nn && r.vertices == 10 * nn + 2 && r.edges == 30 * nn,
                              "F=" + std::to_string(r.m) + " V=" + std::to_string(r.vertices) +
                                  " E=" + std::to_string(r.edges)));
  std::string failures;
  for (const auto& f : a.validation.failures) failures += f + "; ";
  checks.push_back(make_check(group, "validate", a.validation.ok(),
                              failures.empty() ? "all checks pass" : failures));
  checks.push_back(make_check(group, "eta < sqrt 2", r.eta < std::sqrt(2.0), num(r.eta)));
  checks.push_back(make_check(group, "sandwich", r.lower_bound_simple <= r.eta,
                              num(r.lower_bound_simple) + " <= " + num(r.eta)));
  checks.push_back(make_check(group, "conjecture eta <= 2 sin 36", r.eta <= bounds::two_sin36(),
                              num(r.eta) + " vs " + num(bounds::two_sin36()), false));
}

void monotonicity_checks(int n, std::vector<Check>& checks) {
  const std::string group = "kitrick monotonicity n=" + std::to_string(n);
  const auto P = [n](int i, int j) { return kitrick::kitrick_vertex(n, i, j); };
  bool meridional = true;
  bool diagonal = true;
  for (int i = 1; i <= n; ++i) {
    // arc P(i,j-1)P(i,j+1) for j = 0..i-1 (P(i,-1) mirrors P(i,1))
    for (int j = 0; j + 1 <= i - 1; ++j) {
      meridional &= arc_length(P(i, j), P(i, j + 2)) < arc_length(P(i, j - 1), P(i, j + 1));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 <= i; ++j) {
      diagonal &= arc_length(P(i, j + 1), P(i + 1, j + 2)) < arc_length(P(i, j), P(i + 1, j + 1));
    }
  }
  bool equatorial = true;
  for (int i = 0; i + 2 <= n; ++i) {
    equatorial &= arc_length(P(i, 0), P(i + 1, 0)) < arc_length(P(i + 1, 0), P(i + 2, 0));
  }
  checks.push_back(make_check(group, "meridional arcs decrease in j", meridional, ""));
  checks.push_back(make_check(group, "diagonal arcs decrease in j", diagonal, ""));
  checks.push_back(make_check(group, "equatorial steps increase in i", equatorial, ""));
}

void bounds_checks(std::vector<Check>& checks) {
  const std::string group = "bounds";
  const double two_s36 = bounds::two_sin36();

  double worst_chain = 0.0;
  for (long long m = 4; m <= 1'000'000; m += 2) {
    const auto chain = bounds::bound_chain(m);
    worst_chain = std::max(worst_chain, std::abs(chain.refined - chain.simple));
  }
  checks.push_back(make_check(group, "refined bound equals simple bound, m <= 1e6",
                              worst_chain <= 1e-12, "max |diff| " + num(worst_chain, 3)));

  const double d12 = bounds::dk_upper_bound(12);
  const double ico_edge = 4.0 / std::sqrt(10.0 + 2.0 * std::sqrt(5.0));
  checks.push_back(make_check(
      group, "k=12 equality case",
      std::abs(d12 - ico_edge) <= 1e-12 && std::abs(bounds::refined_lower_bound(d12) - 1.0) <= 1e-9,
      "d12 " + num(d12) + ", 2 sin36 sqrt(1-d12^2/4) = " + num(bounds::refined_lower_bound(d12))));

  double worst_residual = 0.0;
  for (double d : {0.0, 0.5, 1.0, d12}) {
    const double mu = bounds::fixed_point_mu(d);
    worst_residual = std::max(worst_residual, std::abs(bounds::f_eta(mu, d) - mu));
  }
  checks.push_back(make_check(group, "fixed point residual", worst_residual <= 1e-12,
                              "max |f(mu)-mu| " + num(worst_residual, 3)));

  bool decreasing = true;
  for (int k = 1; k < 100; ++k) {
    const double d = std::sqrt(2.0) * k / 100.0;
    const double hi = std::min(two_s36, two_s36 / d);
    if (hi <= 1.0) continue;
    double prev = bounds::f_eta(1.0, d);
    for (int t = 1; t <= 100; ++t) {
      const double eta = 1.0 + (hi - 1.0) * t / 100.0;
      const double cur = bounds::f_eta(eta, d);
      decreasing &= cur < prev;
      prev = cur;
    }
  }
  checks.push_back(make_check(group, "f decreasing on [1, 2 sin 36]", decreasing, ""));

  const double c = base_triangle().c;
  const double top = 4.0 * std::pow(std::sin(kAngle36), 2);
  bool in_range = true;
  constexpr int kGrid = 200;
  for (int iu = 0; iu < kGrid; ++iu) {
    const double u = c * iu / (kGrid - 1);
    for (int iv = 0; iv <= iu; ++iv) {
      const double v = c * iv / (kGrid - 1);
      for (auto fam : {bounds::EdgeFamily::meridional, bounds::EdgeFamily::diagonal}) {
        const double k = bounds::edge_coefficient(fam, u, v);
        in_range &= k >= 1.0 - 1e-12 && k <= top + 1e-12;
      }
    }
  }
  checks.push_back(make_check(group, "edge coefficients within [1, 4 sin^2 36]", in_range, ""));

  const double lambda = bounds::lambda_constant();
  const double ratio = std::sin(lambda * c) / std::sin(c);
  checks.push_back(make_check(group, "sin(lambda c)/sin c < sin 36",
                              lambda < 1.0 && ratio < std::sin(kAngle36),
                              "lambda " + num(lambda) + ", ratio " + num(ratio)));

  const auto margin = bounds::half_sphere_contradiction_margin();
  checks.push_back(make_check(group, "half-sphere margin", margin.gap() > 0.0,
                              num(margin.forced_min_distance) + " > " + num(margin.lemma_bound)));
}

}  // namespace

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"kitrick", "clinton1", "clinton2", "icosahedron",
                                              "dodecahedron"};
  return names;
}

TriangleMesh build_construction(const std::string& name, int n) {
  if (name == "icosahedron") return make_icosahedron();
  if (name == "dodecahedron") return make_dodecahedron();
  if (n < 1 || n > kMaxN) {
    throw UsageError("n must be in 1.." + std::to_string(kMaxN) + ", got " + std::to_string(n));
  }
  if (name == "kitrick") return kitrick::build_kitrick(n);
  if (name == "clinton1") return clinton::build_clinton(n, clinton::Variant::centroid);
  if (name == "clinton2") return clinton::build_clinton(n, clinton::Variant::incenter);
  throw UsageError("unknown construction '" + name + "'");
}

int run_gen(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  int n = 1;
  TriangleMesh mesh;
  try {
    if (config.construction.empty()) throw UsageError("--construction is required");
    if (!fixed_size(config.construction)) {
      n = require_n(config);
    } else if (config.n) {
      n = *config.n;
      if (n < 1 || n > kMaxN) throw UsageError("--n must be in 1.." + std::to_string(kMaxN));
    }
    mesh = build_construction(config.construction, n);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: construction failed: " << e.what() << '\n';
    return kExitFailure;
  }
  try {
    const auto eta = measure_eta(mesh);
    write_summary(config.construction, mesh.n(), mesh, eta, out);
    if (!config.out.empty()) meshio::write_obj(mesh, std::filesystem::path(config.out));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int run_analyze(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (config.in.empty()) {
    err << "error: --in is required\n";
    return kExitUsage;
  }
  try {
    std::vector<std::string> warnings;
    const TriangleMesh mesh = meshio::read_obj(std::filesystem::path(config.in), &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    const Analysis a = analyze(mesh);
    if (config.json.empty()) {
      meshio::write_report(a.report, meshio::ReportFormat::json, out);
    } else {
      auto file = open_output(config.json);
      meshio::write_report(a.report, meshio::ReportFormat::json, file);
      out << (a.report.construction.empty() ? "mesh" : a.report.construction)
          << ": m=" << a.report.m << " V=" << a.report.vertices << " E=" << a.report.edges
          << " eta=" << num(a.report.eta)
          << (a.validation.ok() ? " valid" : " INVALID") << '\n';
    }
    if (!config.csv.empty()) {
      auto file = open_output(config.csv);
      file << meshio::csv_header() << '\n';
      meshio::write_report(a.report, meshio::ReportFormat::csv_row, file);
    }
    for (const auto& f : a.validation.failures) err << "validation: " << f << '\n';
    return a.validation.ok() ? kExitOk : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::vector<Check> verification_checks(int n_max) {
  std::vector<Check> checks;
  for (int n = 1; n <= n_max; ++n) kitrick_checks(n, checks);
  for (int n = 1; n <= n_max; ++n) {
    clinton_checks(n, clinton::Variant::centroid, checks);
    clinton_checks(n, clinton::Variant::incenter, checks);
  }
  monotonicity_checks(std::max(n_max, 2), checks);
  bounds_checks(checks);
  return checks;
}

int run_verify(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  int n_max = 0;
  try {
    n_max = require_n_max(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<Check> checks;
  try {
    checks = verification_checks(n_max);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  out << "sandwich: sin36/sin(30(m+4)/m) <= eta <= 2 sin 36 = " << num(bounds::two_sin36())
      << '\n';
  out << "  n  construction        m  lower          eta            closed form\n";
  for (int n = 1; n <= n_max; ++n) {
    for (const std::string name : {"kitrick", "clinton1", "clinton2"}) {
      const TriangleMesh mesh = build_construction(name, n);
      const auto eta = measure_eta(mesh);
      const auto m = static_cast<long long>(mesh.face_count());
      std::ostringstream row;
      row << (n < 10 ? "  " : " ") << n << "  " << name
          << std::string(14 - name.size(), ' ') << std::string(6 - std::to_string(m).size(), ' ')
          << m << "  " << num(bounds::lower_bound_simple(m)) << "  " << num(eta.eta);
      if (name == "kitrick") row << "  " << num(kitrick::kitrick_eta_closed_form(n));
      out << row.str() << '\n';
    }
  }
  out << '\n';

  int hard_failures = 0;
  for (const auto& c : checks) {
    const char* status = c.passed ? "PASS" : (c.hard ? "FAIL" : "NOTE");
    out << '[' << status << "] " << c.group << ": " << c.name;
    if (!c.hard) out << " (conjecture, not asserted)";
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << '\n';
    if (c.hard && !c.passed) {
      ++hard_failures;
      err << "failed: " << c.group << ": " << c.name << '\n';
    }
  }
  out << (hard_failures == 0 ? "all hard checks pass" : "hard checks failed: " +
                                                            std::to_string(hard_failures))
      << '\n';
  return hard_failures == 0 ? kExitOk : kExitFailure;
}

int run_table(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  int n_max = 0;
  std::vector<std::string> names;
  try {
    n_max = require_n_max(config);
    names = config.construction.empty() ? std::vector<std::string>{"kitrick", "clinton1", "clinton2"}
                                        : split_list(config.construction);
    if (names.empty()) throw UsageError("--construction lists no constructions");
    for (const auto& name : names) {
      const auto& known = construction_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw UsageError("unknown construction '" + name + "'");
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream csv;
  csv << "construction,n,m,eta,eta_closed_form,lower_bound_simple,gap_to_2sin36\n";
  try {
    for (const auto& name : names) {
      const int last = fixed_size(name) ? 1 : n_max;
      for (int n = 1; n <= last; ++n) {
        const TriangleMesh mesh = build_construction(name, n);
        const auto eta = measure_eta(mesh);
        const auto m = static_cast<long long>(mesh.face_count());
        csv << name << ',' << n << ',' << m << ',' << num(eta.eta) << ','
            << (name == "kitrick" ? num(kitrick::kitrick_eta_closed_form(n)) : std::string())
            << ',' << num(bounds::lower_bound_simple(m)) << ','
            << num(bounds::two_sin36() - eta.eta) << '\n';
      }
    }
    if (config.csv.empty()) {
      out << csv.str();
    } else {
      auto file = open_output(config.csv);
      file << csv.str();
      out << "wrote " << config.csv << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int run_bounds(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.m || *config.m < 4 || *config.m % 2 != 0) {
    err << "error: --m must be an even face count >= 4\n";
    return kExitUsage;
  }
  const long long m = *config.m;
  const auto chain = bounds::bound_chain(m);
  const double mu = bounds::fixed_point_mu(chain.dk_bound);
  const double residual = std::abs(bounds::f_eta(mu, chain.dk_bound) - mu);
  const double c = base_triangle().c;
  const double lambda = bounds::lambda_constant();
  const auto margin = bounds::half_sphere_contradiction_margin();
  const double printed = bounds::half_sphere_printed_closed_form();

  out << "m = " << m << ", k = m/2 + 2 = " << chain.k << '\n';
  out << "dk upper bound                    " << num(chain.dk_bound) << '\n';
  out << "refined bound 2sin36*sqrt(1-d^2/4) " << num(chain.refined) << '\n';
  out << "simple bound sin36/sin(30(m+4)/m)  " << num(chain.simple) << '\n';
  out << "limit 2 sin 36                    " << num(bounds::two_sin36()) << '\n';
  out << "fixed point mu                    " << num(mu) << "  residual |f(mu)-mu| = "
      << num(residual, 3) << '\n';
  out << "lambda                            " << num(lambda) << '\n';
  out << "sin(lambda c)/sin c               " << num(std::sin(lambda * c) / std::sin(c))
      << "  (sin 36 = " << num(std::sin(kAngle36)) << ")\n";
  out << "half-sphere bound (22+48sqrt6)/145 " << num(margin.lemma_bound) << '\n';
  out << "printed form (24sqrt6+11)/145      " << num(printed) << "  ratio "
      << num(margin.lemma_bound / printed, 6)
      << ": the printed closed form is half the derived bound\n";
  out << "half-sphere margin                " << num(margin.forced_min_distance) << " > "
      << num(margin.lemma_bound) << "  gap " << num(margin.gap()) << '\n';
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inscribed triangle-faced polyhedra with nearly equal edges", "geodome"};
  app.require_subcommand(1);

  CommandConfig config;
  auto* gen = app.add_subcommand("gen", "build a polyhedron and write it as OBJ");
  gen->add_option("--construction", config.construction,
                  "kitrick, clinton1, clinton2, icosahedron or dodecahedron");
  gen->add_option("--n", config.n, "subdivision frequency (1..64)");
  gen->add_option("--out", config.out, "OBJ output path");

  auto* analyze_cmd = app.add_subcommand("analyze", "validate an OBJ mesh and report eta");
  analyze_cmd->add_option("--in", config.in, "OBJ input path");
  analyze_cmd->add_option("--json", config.json, "write the JSON report here");
  analyze_cmd->add_option("--csv", config.csv, "write a CSV report here");

  auto* verify = app.add_subcommand("verify", "check the constructions and bounds");
  verify->add_option("--n-max", config.n_max, "largest subdivision (<= 16)");

  auto* table = app.add_subcommand("table", "eta table per construction and n");
  table->add_option("--construction", config.construction, "comma-separated constructions");
  table->add_option("--n-max", config.n_max, "largest subdivision (<= 16)");
  table->add_option("--csv", config.csv, "write the CSV here instead of standard output");

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the lower-bound chain for m faces");
  bounds_cmd->add_option("--m", config.m, "even face count >= 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (gen->parsed()) return run_gen(config, out, err);
  if (analyze_cmd->parsed()) return run_analyze(config, out, err);
  if (verify->parsed()) return run_verify(config, out, err);
  if (table->parsed()) return run_table(config, out, err);
  return run_bounds(config, out, err);
}

}  // namespace geodome::cli
