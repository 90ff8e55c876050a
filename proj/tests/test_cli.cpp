#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "geodome/cli.hpp"
#include "geodome/kitrick.hpp"
#include "geodome/meshio.hpp"
#include "oracles.hpp"

using namespace geodome;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "geodome");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("geodome_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("gen writes an OBJ and a summary") {
  TempDir tmp;
  const auto r = run({"gen", "--construction", "kitrick", "--n", "3", "--out", tmp.file("k3.obj")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("m=540") != std::string::npos);
  CHECK(r.out.find("eta=1.16862889024") != std::string::npos);
  const TriangleMesh mesh = meshio::read_obj(fs::path(tmp.file("k3.obj")));
  CHECK(mesh.face_count() == 540);

  const auto ico = run({"gen", "--construction", "clinton1", "--n", "1", "--out", tmp.file("i.obj")});
  CHECK(ico.code == cli::kExitOk);
  CHECK(ico.out.find("eta=1 ") != std::string::npos);

  CHECK(run({"gen", "--construction", "icosahedron"}).code == cli::kExitOk);
  CHECK(run({"gen", "--construction", "dodecahedron"}).code == cli::kExitOk);
}

TEST_CASE("gen usage errors") {
  CHECK(run({"gen", "--construction", "kitrick", "--n", "0"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--construction", "kitrick", "--n", "65"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--construction", "kitrick"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--n", "2"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--construction", "goldberg", "--n", "2"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--construction", "kitrick", "--n", "two"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gen", "--construction", "kitrick", "--n", "2", "--out", "/nonexistent/dir/x.obj"})
            .code == cli::kExitFailure);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("analyze reports JSON") {
  TempDir tmp;
  REQUIRE(run({"gen", "--construction", "kitrick", "--n", "2", "--out", tmp.file("k2.obj")}).code ==
          0);
  const auto r = run({"analyze", "--in", tmp.file("k2.obj")});
  CHECK(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["eta"].get<double>() - oracle::kKitrickEta[2]) < 1e-9);
  CHECK(j["construction"] == "kitrick");

  const auto f = run({"analyze", "--in", tmp.file("k2.obj"), "--json", tmp.file("r.json"), "--csv",
                      tmp.file("r.csv")});
  CHECK(f.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(slurp(tmp.file("r.json"))) == j);
  const auto csv = lines(slurp(tmp.file("r.csv")));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == meshio::csv_header());
  CHECK(csv[1].rfind("kitrick,2,240,122,360,", 0) == 0);
}

TEST_CASE("analyze of the icosahedron sits on the bound") {
  TempDir tmp;
  REQUIRE(run({"gen", "--construction", "icosahedron", "--out", tmp.file("i.obj")}).code == 0);
  const auto j = nlohmann::json::parse(run({"analyze", "--in", tmp.file("i.obj")}).out);
  CHECK(j["eta"].get<double>() == 1.0);
  CHECK(j["lower_bound_simple"].get<double>() == 1.0);
}

TEST_CASE("analyze failures") {
  TempDir tmp;
  // Flip one edge of a Kitrick mesh: still closed, but no longer convex.
  const TriangleMesh k3 = kitrick::build_kitrick(3);
  auto faces = k3.faces();
  const Face f0 = faces[0];
  std::size_t other = 0;
  std::uint32_t apex = 0;
  for (std::size_t k = 1; k < faces.size() && other == 0; ++k) {
    for (int s = 0; s < 3; ++s) {
      if (faces[k][s] == f0[1] && faces[k][(s + 1) % 3] == f0[0]) {
        other = k;
        apex = faces[k][(s + 2) % 3];
      }
    }
  }
  REQUIRE(other != 0);
  faces[0] = {f0[2], f0[0], apex};
  faces[other] = {apex, f0[1], f0[2]};
  {
    std::ofstream out(tmp.file("flip.obj"));
    meshio::write_obj(TriangleMesh("kitrick", 3, k3.vertices(), faces), out);
  }
  const auto flip = run({"analyze", "--in", tmp.file("flip.obj")});
  CHECK(flip.code == cli::kExitFailure);
  const auto j = nlohmann::json::parse(flip.out);
  CHECK(j["is_convex"] == false);

  {
    std::ofstream out(tmp.file("off.obj"));
    out << "v 1.1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3\n";
  }
  CHECK(run({"analyze", "--in", tmp.file("off.obj")}).code == cli::kExitFailure);
  {
    std::ofstream out(tmp.file("bad.obj"));
    out << "v 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 9\n";
  }
  const auto bad = run({"analyze", "--in", tmp.file("bad.obj")});
  CHECK(bad.code == cli::kExitFailure);
  CHECK(bad.err.find("line 4") != std::string::npos);
  CHECK(run({"analyze", "--in", tmp.file("missing.obj")}).code == cli::kExitFailure);
  CHECK(run({"analyze"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--n-max", "4"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("all hard checks pass") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("kitrick n=4: eta equals closed form") != std::string::npos);
  CHECK(r.out.find("0.982246946377 > 0.962589707956") != std::string::npos);
  CHECK(r.out.find("conjecture") != std::string::npos);
  CHECK(run({"verify", "--n-max", "17"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--n-max", "0"}).code == cli::kExitUsage);
}

TEST_CASE("verification checks are all hard-passing except reported conjectures") {
  const auto checks = cli::verification_checks(3);
  CHECK(checks.size() > 30);
  for (const auto& c : checks) {
    if (c.hard) CHECK_MESSAGE(c.passed, c.group << ": " << c.name << " " << c.detail);
  }
}

TEST_CASE("table") {
  const auto r = run({"table", "--construction", "kitrick", "--n-max", "4"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "construction,n,m,eta,eta_closed_form,lower_bound_simple,gap_to_2sin36");
  CHECK(rows[1].rfind("kitrick,1,60,1.1135868809,1.1135868809,1.10919774382,", 0) == 0);
  CHECK(rows[4].rfind("kitrick,4,960,1.17166416303,", 0) == 0);

  const auto all = run({"table", "--n-max", "3"});
  CHECK(all.code == cli::kExitOk);
  const auto all_rows = lines(all.out);
  CHECK(all_rows.size() == 10);
  CHECK(all.out.find("\nclinton1,1,20,1,,1,") != std::string::npos);
  for (std::size_t k = 1; k < all_rows.size(); ++k) {
    const auto second = all_rows[k].find(',', all_rows[k].find(',') + 1);
    const auto first = all_rows[k].find(',', second + 1);
    const double eta = std::stod(all_rows[k].substr(first + 1));
    CHECK(eta < oracle::kTwoSin36);
  }

  TempDir tmp;
  CHECK(run({"table", "--n-max", "2", "--csv", tmp.file("t.csv")}).code == cli::kExitOk);
  CHECK(lines(slurp(tmp.file("t.csv"))).size() == 7);

  CHECK(run({"table", "--construction", "nope"}).code == cli::kExitUsage);
  CHECK(run({"table", "--n-max", "20"}).code == cli::kExitUsage);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "--m", "60"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("k = m/2 + 2 = 32") != std::string::npos);
  CHECK(r.out.find("simple bound sin36/sin(30(m+4)/m)  1.10919774382") != std::string::npos);
  CHECK(r.out.find("residual") != std::string::npos);
  CHECK(r.out.find("half the derived bound") != std::string::npos);

  const auto twenty = run({"bounds", "--m", "20"});
  CHECK(twenty.out.find("simple bound sin36/sin(30(m+4)/m)  1\n") != std::string::npos);

  CHECK(run({"bounds", "--m", "61"}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--m", "2"}).code == cli::kExitUsage);
  CHECK(run({"bounds"}).code == cli::kExitUsage);
}

TEST_CASE("commands are deterministic") {
  TempDir tmp;
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"table", "--n-max", "3"},
        std::vector<std::string>{"bounds", "--m", "240"},
        std::vector<std::string>{"verify", "--n-max", "2"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  run({"gen", "--construction", "clinton2", "--n", "5", "--out", tmp.file("a.obj")});
  run({"gen", "--construction", "clinton2", "--n", "5", "--out", tmp.file("b.obj")});
  CHECK(slurp(tmp.file("a.obj")) == slurp(tmp.file("b.obj")));
}
