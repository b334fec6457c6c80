#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "ncgeom/cli.hpp"
#include "ncgeom/report.hpp"

using nlohmann::json;
namespace cli = ncgeom::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tempJson(const std::string& stem) {
  return std::filesystem::temp_directory_path() / (stem + "_" + std::to_string(::getpid()) + ".json");
}

json readJson(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

const json* findCheck(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("sphere --dim 3") {
  const auto path = tempJson("sphere3");
  const auto r = run({"--json", path.string(), "sphere", "--dim", "3", "--trials", "5"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("scalar_curvature_closed_form") != std::string::npos);
  const json j = readJson(path);
  std::filesystem::remove(path);
  CHECK(j["suite"] == "sphere");
  CHECK(j["seed"] == 42);
  const json* c = findCheck(j, "scalar_curvature_closed_form");
  REQUIRE(c != nullptr);
  CHECK((*c)["pass"] == true);
  CHECK((*c)["params"]["value"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  for (const auto& chk : j["checks"]) CHECK(ncgeom::isDocumentedAnchor(chk["paper_anchor"].get<std::string>()));
}

TEST_CASE("torus --dim 4 --k 1") {
  const auto path = tempJson("torus41");
  const auto r = run({"torus", "--dim", "4", "--k", "1", "--trials", "5", "--json", path.string()});
  CHECK(r.code == cli::kExitPass);
  const json j = readJson(path);
  std::filesystem::remove(path);
  const json* c = findCheck(j, "curvature_vanishes");
  REQUIRE(c != nullptr);
  CHECK((*c)["max_residual"].get<double>() <= 1e-10);
  CHECK((*c)["pass"] == true);
}

TEST_CASE("usage errors") {
  CHECK(run({"torus", "--dim", "4", "--k", "2"}).code == cli::kExitUsage);
  CHECK(run({"torus", "--dim", "4", "--k", "0"}).code == cli::kExitUsage);
  CHECK(run({"torus", "--dim", "2", "--k", "1"}).code == cli::kExitUsage);
  CHECK(run({"sphere", "--dim", "1"}).code == cli::kExitUsage);
  CHECK(run({"sphere"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"classical", "--surface", "cube"}).code == cli::kExitUsage);
  CHECK(run({"classical", "--mode", "symbolic"}).code == cli::kExitUsage);
  CHECK(run({"sweep", "--max-dim", "1"}).code == cli::kExitUsage);
  CHECK(run({"--atol", "-1", "sphere", "--dim", "3"}).code == cli::kExitUsage);
  const auto pole = run({"torus", "--dim", "4", "--k", "2"});
  CHECK(pole.err.find("pole") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitPass);
}

TEST_CASE("failing checks exit 1") {
  const auto r = run({"--atol", "0", "--rtol", "0", "sphere", "--dim", "5", "--trials", "2"});
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("classical and sweep subcommands") {
  CHECK(run({"classical", "--surface", "sphere", "--grid", "8", "--samples", "5"}).code == cli::kExitPass);
  CHECK(run({"classical", "--surface", "clifford-torus", "--mode", "fd", "--grid", "8"}).code ==
        cli::kExitPass);
  CHECK(run({"classical", "--surface", "sphere", "--mode", "fd", "--fd-step", "1e-5"}).code ==
        cli::kExitPass);
  const auto path = tempJson("sweep");
  CHECK(run({"--json", path.string(), "sweep", "--max-dim", "5", "--trials", "1"}).code == cli::kExitPass);
  const json j = readJson(path);
  std::filesystem::remove(path);
  const json* row = findCheck(j, "n002_sphere_suite");
  REQUIRE(row != nullptr);
  CHECK(row->at("params")["scalar_curvature"].get<double>() == doctest::Approx(-2.0 / 9.0));
  CHECK(findCheck(j, "monotonic_increase")->at("pass") == true);
}

TEST_CASE("reports are byte-stable") {
  const std::vector<std::string> args{"torus", "--dim", "5", "--k", "2", "--trials", "3", "--seed", "9"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);

  const auto p1 = tempJson("stable1"), p2 = tempJson("stable2");
  run({"--json", p1.string(), "sphere", "--dim", "4", "--trials", "3"});
  run({"--json", p2.string(), "sphere", "--dim", "4", "--trials", "3"});
  json j1 = readJson(p1), j2 = readJson(p2);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  j1.erase("wall_time_ms");
  j2.erase("wall_time_ms");
  CHECK(j1.dump() == j2.dump());

  // A different seed changes the random-input residuals.
  const auto c = run({"torus", "--dim", "5", "--k", "2", "--trials", "3", "--seed", "10"});
  CHECK(c.out != a.out);
}
