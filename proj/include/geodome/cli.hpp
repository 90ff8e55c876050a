#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodome/polymesh.hpp"

namespace geodome::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxN = 64;
inline constexpr int kMaxTableN = 16;
inline constexpr int kDefaultNMax = 8;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subcommand { gen, analyze, verify, table, bounds };

struct CommandConfig {
  Subcommand subcommand = Subcommand::gen;
  std::string construction;  // kitrick, clinton1, clinton2, icosahedron, dodecahedron
  std::optional<int> n;
  int n_max = kDefaultNMax;
  std::optional<long long> m;
  std::string in;
  std::string out;
  std::string json;
  std::string csv;
};

const std::vector<std::string>& construction_names();

/// Builds a named construction. icosahedron and dodecahedron ignore n.
/// Throws UsageError for unknown names or n outside 1..kMaxN.
TriangleMesh build_construction(const std::string& name, int n);

int run_gen(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_analyze(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_table(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_bounds(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One line of the verify matrix. Hard checks decide the exit code; soft
/// checks (open conjectures) are only reported.
struct Check {
  std::string group;
  std::string name;
  bool passed = false;
  bool hard = true;
  std::string detail;
};

/// Every check run by `verify` for subdivisions 1..n_max.
std::vector<Check> verification_checks(int n_max);

}  // namespace geodome::cli
