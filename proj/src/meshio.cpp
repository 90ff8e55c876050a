#include "geodome/meshio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace geodome::meshio {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line, "bad number '" + std::string(token) + "'");
  }
  return value;
}

long long parse_index(std::string_view token, std::size_t line) {
  // Accept "i", "i/t", "i//n", "i/t/n"; only the position index matters.
  token = token.substr(0, token.find('/'));
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad face index '" + std::string(token) + "'");
  }
  return value;
}

// "# construction=kitrick n=3 faces=540"
void parse_header(std::string_view comment, std::string& construction, int& n) {
  for (auto token : split_ws(comment)) {
    if (token.starts_with("construction=")) {
      construction = std::string(token.substr(13));
    } else if (token.starts_with("n=")) {
      int value = 0;
      const auto digits = token.substr(2);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) n = value;
    }
  }
}

double round_to(double value, int digits) {
  const std::string text = format_number(value, digits);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_number(double value, int digits) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, digits);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_obj(const TriangleMesh& mesh, std::ostream& out) {
  std::string text;
  text.reserve(mesh.vertex_count() * 64 + mesh.face_count() * 24 + 128);
  text += "# ";
  text += kToolName;
  text += " ";
  text += kToolVersion;
  text += "\n# construction=";
  text += mesh.construction().empty() ? "unknown" : mesh.construction();
  text += " n=" + std::to_string(mesh.n()) + " faces=" + std::to_string(mesh.face_count()) + "\n";
  for (const auto& v : mesh.vertices()) {
    text += "v ";
    text += format_number(v.x, 17);
    text += ' ';
    text += format_number(v.y, 17);
    text += ' ';
    text += format_number(v.z, 17);
    text += '\n';
  }
  for (const auto& f : mesh.faces()) {
    text += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' +
            std::to_string(f[2] + 1) + '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing OBJ stream");
}

void write_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  write_obj(mesh, file);
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

TriangleMesh read_obj(std::istream& in, std::vector<std::string>* warnings) {
  std::string construction;
  int n = 0;
  std::vector<Vec3> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<std::array<long long, 3>> raw_faces;
  std::vector<std::size_t> face_lines;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view(line);
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    const auto kind = tokens[0];
    if (kind.starts_with("#")) {
      parse_header(view.substr(view.find('#') + 1), construction, n);
    } else if (kind == "v") {
      if (tokens.size() < 4) throw ParseError(line_no, "vertex needs three coordinates");
      vertices.push_back({parse_double(tokens[1], line_no), parse_double(tokens[2], line_no),
                          parse_double(tokens[3], line_no)});
      vertex_lines.push_back(line_no);
    } else if (kind == "f") {
      if (tokens.size() != 4) throw ParseError(line_no, "only triangular faces are supported");
      raw_faces.push_back({parse_index(tokens[1], line_no), parse_index(tokens[2], line_no),
                           parse_index(tokens[3], line_no)});
      face_lines.push_back(line_no);
    } else if (warnings) {
      warnings->push_back("line " + std::to_string(line_no) + ": ignoring '" +
                          std::string(kind) + "' record");
    }
  }
  if (in.bad()) throw IoError("failed reading OBJ stream");

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vec3& v = vertices[i];
    const double len = norm(v);
    if (std::abs(len - 1.0) > kInscribedTolerance) {
      throw NotInscribed("line " + std::to_string(vertex_lines[i]) + ": vertex norm " +
                         format_number(len, 17) + " is not on the unit sphere");
    }
    if (std::abs(len - 1.0) > 1e-14) v = v / len;
  }

  const auto count = static_cast<long long>(vertices.size());
  std::vector<Face> faces;
  faces.reserve(raw_faces.size());
  for (std::size_t f = 0; f < raw_faces.size(); ++f) {
    Face face{};
    for (int k = 0; k < 3; ++k) {
      long long idx = raw_faces[f][k];
      if (idx < 0) idx = count + idx + 1;  // relative index
      if (idx < 1 || idx > count) {
        throw ParseError(face_lines[f], "face index " + std::to_string(raw_faces[f][k]) +
                                            " out of range 1.." + std::to_string(count));
      }
      face[k] = static_cast<std::uint32_t>(idx - 1);
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      throw ParseError(face_lines[f], "face repeats a vertex");
    }
    faces.push_back(face);
  }
  return TriangleMesh(construction, n, std::move(vertices), std::move(faces));
}

TriangleMesh read_obj(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string());
  return read_obj(file, warnings);
}

const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> fields{
      "construction",       "n",         "m",
      "vertices",           "edges",     "min_edge",
      "max_edge",           "eta",       "eta_closed_form",
      "lower_bound_simple", "is_convex", "all_faces_acute",
      "max_norm_deviation", "eta_below_2sin36"};
  return fields;
}

std::string csv_header() {
  std::string out;
  for (const auto& f : report_fields()) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out;
}

void write_report(const UniformityReport& r, ReportFormat format, std::ostream& out) {
  constexpr int kDigits = 12;
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["construction"] = r.construction;
    j["n"] = r.n;
    j["m"] = r.m;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["min_edge"] = round_to(r.min_edge, kDigits);
    j["max_edge"] = round_to(r.max_edge, kDigits);
    j["eta"] = round_to(r.eta, kDigits);
    j["eta_closed_form"] =
        r.eta_closed_form ? nlohmann::ordered_json(round_to(*r.eta_closed_form, kDigits))
                          : nlohmann::ordered_json(nullptr);
    j["lower_bound_simple"] = round_to(r.lower_bound_simple, kDigits);
    j["is_convex"] = r.is_convex;
    j["all_faces_acute"] = r.all_faces_acute;
    j["max_norm_deviation"] = round_to(r.max_norm_deviation, kDigits);
    j["eta_below_2sin36"] = r.eta_below_2sin36;
    out << j.dump(2) << '\n';
    return;
  }
  const auto num = [&](double v) { return format_number(v, kDigits); };
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out << r.construction << ',' << r.n << ',' << r.m << ',' << r.vertices << ',' << r.edges << ','
      << num(r.min_edge) << ',' << num(r.max_edge) << ',' << num(r.eta) << ','
      << (r.eta_closed_form ? num(*r.eta_closed_form) : std::string()) << ','
      << num(r.lower_bound_simple) << ',' << flag(r.is_convex) << ','
      << flag(r.all_faces_acute) << ',' << num(r.max_norm_deviation) << ','
      << flag(r.eta_below_2sin36) << '\n';
}

}  // namespace geodome::meshio
