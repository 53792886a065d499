// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "lambdaspec/io/config.hpp"
#include "lambdaspec/io/run.hpp"

using namespace lambdaspec;
namespace fs = std::filesystem;

namespace {

const char* kMinimal = R"({"omega1": 8.5, "omega2": 8.5, "delta": 35, "gamma1": 5, "gamma2": 5,
                           "eta1": 0.01, "eta2": 0.01})";

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lambdaspec_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(LAMBDASPEC_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("minimal config fills the documented defaults") {
  const RunConfig c = parse_config_text(kMinimal);
  CHECK(c.params.phi1 == 0.0);
  CHECK(c.params.phi2 == doctest::Approx(3.141592653589793));
  CHECK(c.params.psi == doctest::Approx(1.5707963267948966));
  CHECK(c.params.pattern == EmissionPattern::Isotropic);
  CHECK(c.params.n_max == 15);
  CHECK(!c.n_max_explicit);
  CHECK(c.oracle.n_max == 8);
  CHECK(c.oracle.quadrature_nodes == 16);
}

TEST_CASE("config errors name the field") {
  auto field_of = [](const std::string& text) {
    try {
      parse_config_text(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::string base = kMinimal;
  base.pop_back();
  CHECK(field_of(base + R"(, "colour": 1})").find("colour") != std::string::npos);
  CHECK(field_of(base + R"(, "grid": {"points": 1}})").find("grid.points") != std::string::npos);
  CHECK(field_of(base + R"(, "grid": {"step": 1}})").find("grid.step") != std::string::npos);
  CHECK(field_of(base + R"(, "oracle": {"n_max": "8"}})").find("oracle.n_max") != std::string::npos);
  CHECK(field_of(base + R"(, "beta": 0.5})").find("beta") != std::string::npos);
  CHECK(field_of(base + R"(, "pattern": "custom", "beta": 1.5})").find("beta") != std::string::npos);
  CHECK(field_of(R"({"omega1": 1})").find("omega2") != std::string::npos);
  CHECK(field_of("{not json").find("JSON") != std::string::npos);
  std::string neg = kMinimal;
  neg.replace(neg.find("\"gamma1\": 5"), 11, "\"gamma1\": -1");
  CHECK(field_of(neg).find("gamma1") != std::string::npos);
}

TEST_CASE("the fig2a preset parses to its parameters") {
  const RunConfig c = load_config(fs::path(LAMBDASPEC_PRESETS) / "fig2a.json");
  CHECK(c.name == "fig2a");
  CHECK(c.params.omega1 == 8.5);
  CHECK(c.params.omega2 == 8.5);
  CHECK(c.params.gamma() == 10.0);
  CHECK(c.params.delta == 35.0);
  CHECK(c.params.eta1 == 0.01);
  CHECK(c.params.eta2 == 0.01);
  for (const char* name : {"fig2b", "fig3a", "fig3b", "fig3c", "fig4"})
    CHECK_NOTHROW(load_config(fs::path(LAMBDASPEC_PRESETS) / (std::string(name) + ".json")));
}

TEST_CASE("missing config is an I/O error") {
  CHECK_THROWS_AS(load_config("/nonexistent/lambdaspec.json"), IoError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-3.0) == "-3");
}

TEST_CASE("summary reproduces the reference phonon numbers") {
  const fs::path dir = scratch_dir("summary");
  REQUIRE(cli("summary --config " + std::string(LAMBDASPEC_PRESETS) + "/fig2a.json --out " + dir.string() +
              "/a --no-metadata") == 0);
  REQUIRE(cli("summary --config " + std::string(LAMBDASPEC_PRESETS) + "/fig4.json --out " + dir.string() +
              "/b --no-metadata") == 0);
  const RunConfig a = load_config(fs::path(LAMBDASPEC_PRESETS) / "fig2a.json");
  const RunConfig b = load_config(fs::path(LAMBDASPEC_PRESETS) / "fig4.json");
  const double na = analyze(resolved_params(a)).coefficients.n_bar;
  const double nb = analyze(resolved_params(b)).coefficients.n_bar;
  CHECK(std::abs(na - 0.005) / 0.005 < 0.10);
  CHECK(std::abs(nb - 0.2) / 0.2 < 0.05);
  const std::string text = slurp(dir / "a" / "summary.json");
  for (const char* key : {"\"n_bar\"", "\"A_plus\"", "\"A_minus\"", "\"gamma_S\"", "\"nu_bar\"", "\"s0\"",
                          "\"elastic_weight\"", "\"lambda_I\""})
    CHECK(text.find(key) != std::string::npos);
  CHECK(text.find("metadata") == std::string::npos);
}

TEST_CASE("spectrum output is deterministic and well formed") {
  const fs::path dir = scratch_dir("spectrum");
  const fs::path cfg = write_config(dir, "run.json", std::string(kMinimal).insert(1, R"("grid": {"omega_min": -2, "omega_max": 2, "points": 81}, )"));
  REQUIRE(cli("spectrum --config " + cfg.string() + " --out " + (dir / "one").string() + " --no-metadata") == 0);
  REQUIRE(cli("spectrum --config " + cfg.string() + " --out " + (dir / "two").string() + " --no-metadata") == 0);
  for (const char* f : {"spectrum.csv", "summary.json", "spectrum.gp"})
    CHECK(slurp(dir / "one" / f) == slurp(dir / "two" / f));

  const std::string csv = slurp(dir / "one" / "spectrum.csv");
  CHECK(csv.rfind("omega,S_total,S_SB,S_M\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  // 81 grid points plus two refined sideband windows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 81 + 2 * 241);

  const std::string gp = slurp(dir / "one" / "spectrum.gp");
  CHECK(gp.find("multiplot") != std::string::npos);
  CHECK(gp.find("spectrum.csv") != std::string::npos);

  REQUIRE(cli("summary --config " + cfg.string() + " --out " + (dir / "meta").string()) == 0);
  CHECK(slurp(dir / "meta" / "summary.json").find("\"metadata\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch_dir("exit");
  std::string neg = kMinimal;
  neg.replace(neg.find("\"gamma1\": 5"), 11, "\"gamma1\": -1");
  CHECK(cli("summary --config " + write_config(dir, "neg.json", neg).string() + " --out " + dir.string()) == 2);
  CHECK(cli("summary --config " + write_config(dir, "bad.json", "{\"x\": 1}").string()) == 2);
  CHECK(cli("summary") == 2);
  CHECK(cli("frobnicate --config x.json") == 2);
  CHECK(cli("summary --config " + (dir / "missing.json").string()) == 3);

  const fs::path blocker = write_config(dir, "blocker", "file, not a directory");
  CHECK(cli("summary --config " + write_config(dir, "ok.json", kMinimal).string() + " --out " + blocker.string()) == 3);

  std::string heat = kMinimal;
  heat.replace(heat.find("\"delta\": 35"), 11, "\"delta\": -35");
  CHECK(cli("summary --config " + write_config(dir, "heat.json", heat).string() + " --out " + dir.string()) == 4);
}

TEST_CASE("selftest passes on the minimal config") {
  const fs::path dir = scratch_dir("selftest");
  CHECK(cli("selftest --config " + write_config(dir, "min.json", kMinimal).string()) == 0);
}
