#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodome/analysis.hpp"
#include "geodome/polymesh.hpp"

// OBJ subset: "v x y z" and "f i j k" (1-based) lines plus comments. The
// header comment "# construction=<name> n=<n> faces=<F>" is written and
// read back so reports on re-read meshes know their construction.
namespace geodome::meshio {

inline constexpr const char* kToolName = "geodome";
inline constexpr const char* kToolVersion = "1.0.0";

/// Coordinates further than this from the unit sphere are rejected on read.
inline constexpr double kInscribedTolerance = 1e-6;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};
class NotInscribed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `value` in %.*g style with `digits` significant digits and "." as the
/// decimal separator regardless of locale.
std::string format_number(double value, int digits);

/// Deterministic: identical meshes give identical bytes. Coordinates use 17
/// significant digits, so they read back bit-exact.
void write_obj(const TriangleMesh& mesh, std::ostream& out);
void write_obj(const TriangleMesh& mesh, const std::filesystem::path& path);

/// Vertices within kInscribedTolerance of the sphere are renormalized (left
/// untouched if already within 1e-14). Unknown line types are skipped and
/// described in `warnings` when given.
TriangleMesh read_obj(std::istream& in, std::vector<std::string>* warnings = nullptr);
TriangleMesh read_obj(const std::filesystem::path& path,
                      std::vector<std::string>* warnings = nullptr);

enum class ReportFormat { json, csv_row };

/// Column order shared by the JSON object and the CSV row.
const std::vector<std::string>& report_fields();
std::string csv_header();

/// JSON: one object with report_fields() in order, numbers at 12
/// significant digits, eta_closed_form null unless Kitrick. CSV: one row
/// (no header), empty cell for a missing closed form. Both end with LF.
void write_report(const UniformityReport& report, ReportFormat format, std::ostream& out);

}  // namespace geodome::meshio
