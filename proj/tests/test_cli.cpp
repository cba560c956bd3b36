#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schwarz/cli.hpp"

namespace fs = std::filesystem;
using schwarz::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json results(const Outcome& o) { return nlohmann::json::parse(o.out).at("results"); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "schwarz_cli_tests";
  fs::create_directories(d);
  return d;
}

const std::string kHille = "((1+z)/(1-z))^(1i)";

}  // namespace

TEST_CASE("cli examples") {
  const Outcome s = invoke({"schwarzian", "--f", kHille, "--at", "0"});
  REQUIRE(s.code == 0);
  CHECK(results(s)["value"]["re"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(results(s)["value"]["im"].get<double>() == 0.0);

  const Outcome c = invoke({"criterion", "--f", "z/(1-z)^2", "--p", "classical", "--depth", "8"});
  REQUIRE(c.code == 0);
  CHECK(results(c)["minimal_C"].get<double>() == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(results(c)["classification"] == "UniformLocal");

  const Outcome g = invoke({"gallery", "--depth", "8"});
  CHECK(g.code == 0);
  for (const char* name : {"hille", "parametric", "catenoid", "koebe", "koebe-shear"}) {
    CHECK(g.out.find(std::string("PASS ") + name + " (") != std::string::npos);
  }
  CHECK(g.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli gallery selection") {
  const Outcome one = invoke({"gallery", "--only", "catenoid", "--depth", "8"});
  CHECK(one.code == 0);
  CHECK(one.out.find("PASS catenoid") != std::string::npos);
  CHECK(one.out.find("hille") == std::string::npos);

  const fs::path path = scratch_dir() / "gallery_hille2.json";
  const Outcome h = invoke({"gallery", "--only", "hille", "--delta", "2", "--out", path.string()});
  CHECK(h.code == 0);
  const auto rep = nlohmann::json::parse(slurp(path));
  CHECK(rep["inputs"]["delta"] == 2.0);
  bool saw_separation = false;
  for (const auto& ch : rep["results"]["hille"]["checks"]) {
    CHECK(ch["pass"] == true);
    saw_separation |= ch["name"].get<std::string>().find("separation") != std::string::npos;
  }
  CHECK(saw_separation);

  const Outcome bad = invoke({"gallery", "--only", "nope"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"schwarzian", "--f", "z", "--at", "0", "--bogus", "1"}).code == 2);
  CHECK(invoke({"schwarzian", "--f", "z+", "--at", "0"}).code == 2);
  CHECK(invoke({"schwarzian", "--f", "z"}).code == 2);
  CHECK(invoke({"schwarzian", "--f", "z", "--at", "x"}).code == 2);
  CHECK(invoke({"schwarzian", "--f", "z", "--at", "2"}).code == 3);
  CHECK(invoke({"schwarzian", "--f", "1/z", "--at", "0"}).code == 3);
  CHECK(invoke({"criterion", "--f", "z", "--p", "param:3"}).code == 2);
  CHECK(invoke({"criterion", "--f", "z", "--C", "-1"}).code == 2);
  CHECK(invoke({"valence", "--f", "z", "--w", "0.5", "--r", "0.5"}).code == 3);
  CHECK(invoke({"valence", "--f", "z", "--r", "1.5"}).code == 2);
  CHECK(invoke({"lift", "--h", "z"}).code == 2);

  const Outcome unknown = invoke({"norm", "--f", "z", "--nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  const Outcome help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("gallery") != std::string::npos);
}

TEST_CASE("cli error messages carry locations") {
  const Outcome parse = invoke({"norm", "--f", "z*(1+"});
  CHECK(parse.err.find("--f") != std::string::npos);
  const Outcome pole = invoke({"schwarzian", "--f", "1/z", "--at", "0"});
  CHECK(pole.err.find("z = ") != std::string::npos);
}

TEST_CASE("cli writes meshes") {
  const fs::path mesh = scratch_dir() / "shear.obj";
  const Outcome o = invoke({"shear", "--phi", "z/(1-z)^2", "--q", "z", "--mesh-out", mesh.string(), "--nr", "4",
                            "--ntheta", "5"});
  REQUIRE(o.code == 0);
  const std::string obj = slurp(mesh);
  std::size_t v = 0, f = 0;
  std::istringstream in(obj);
  for (std::string line; std::getline(in, line);) {
    v += line.rfind("v ", 0) == 0;
    f += line.rfind("f ", 0) == 0;
  }
  CHECK(v == 20);
  CHECK(f == 30);
  const fs::path csv = scratch_dir() / "shear.curvature.csv";
  REQUIRE(fs::exists(csv));
  CHECK(slurp(csv).rfind("index,K\n", 0) == 0);
  CHECK(results(o)["mesh"]["vertices"] == 20);
}

TEST_CASE("cli reports are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"criterion", "--f", kHille, "--p", "param:1.5", "--depth", "7"},
        std::vector<std::string>{"shear", "--phi", "exp(z)", "--q", "z/2", "--at", "0.1,0.2"},
        std::vector<std::string>{"valence", "--f", kHille, "--w", "1", "--r", "0.999"}}) {
    const Outcome a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

// Set SCHWARZ_UPDATE_GOLDEN=1 to rewrite the files after an intended schema change.
TEST_CASE("cli golden reports") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"schwarzian", {"schwarzian", "--f", kHille, "--at", "0.3,0.2"}},
      {"schwarzian_harmonic", {"schwarzian", "--h", "1/(3*(1-z)^3)", "--q", "z", "--at", "0.2,-0.1"}},
      {"norm", {"norm", "--f", "z/(1-z)^2", "--depth", "6"}},
      {"criterion", {"criterion", "--f", "exp(4*z)", "--p", "param:1.5", "--C", "5", "--depth", "6"}},
      {"criterion_const", {"criterion", "--f", "exp(2*z)", "--p", "const", "--depth", "6"}},
      {"valence", {"valence", "--f", kHille, "--w", "1", "--r", "0.999"}},
      {"ode", {"ode", "--p", "classical", "--delta", "1"}},
      {"lift", {"lift", "--h", "z", "--q", "1i/z", "--g", "1/z", "--radius", "inf", "--z0", "1", "--at", "2"}},
      {"shear", {"shear", "--phi", "z/(1-z)^2", "--q", "z", "--at", "0.3,0.1"}},
  };
  const fs::path dir = SCHWARZ_GOLDEN_DIR;
  const bool update = std::getenv("SCHWARZ_UPDATE_GOLDEN") != nullptr;
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const Outcome o = invoke(args);
    REQUIRE(o.code == 0);
    const fs::path file = dir / (name + ".json");
    if (update) {
      std::ofstream(file) << o.out;
      continue;
    }
    REQUIRE(fs::exists(file));
    CHECK(o.out == slurp(file));
  }
}
