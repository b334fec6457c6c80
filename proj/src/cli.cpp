#include "ncgeom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "ncgeom/nc_torus.hpp"
#include "ncgeom/suites.hpp"

namespace ncgeom::cli {

namespace {

int emit(const SuiteReport& report, const std::string& jsonPath, std::ostream& out,
         std::ostream& err) {
  writeText(report, out);
  if (!jsonPath.empty()) {
    std::ofstream file(jsonPath, std::ios::binary);
    if (!file || !(file << toJson(report))) {
      err << "error: cannot write report to " << jsonPath << "\n";
      return kExitUsage;
    }
  }
  return report.allPass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification of noncommutative tangent bundles, connections and curvature", "ncverify"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string jsonPath;
  SuiteOptions opts;
  app.add_option("--json", jsonPath, "Write the structured report to this path");
  app.add_option("--atol", opts.atol, "Absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--rtol", opts.rtol, "Relative tolerance")->check(CLI::NonNegativeNumber);

  int dim = 0;
  int k = 0;
  int maxDim = 0;
  int sweepTrials = 10;
  ClassicalOptions copts;
  std::string mode = "analytic";

  auto* sphere = app.add_subcommand("sphere", "Fuzzy sphere suite");
  sphere->add_option("--dim", dim, "Representation dimension N >= 2")->required();
  sphere->add_option("--trials", opts.trials, "Random trials per identity")->check(CLI::NonNegativeNumber);
  sphere->add_option("--seed", opts.seed, "Seed for random inputs");

  auto* torus = app.add_subcommand("torus", "Noncommutative torus suite at theta = pi k / N");
  torus->add_option("--dim", dim, "Representation dimension N >= 3")->required();
  torus->add_option("--k", k, "Angle numerator, 0 < 2k < N")->required();
  torus->add_option("--trials", opts.trials, "Random trials per identity")->check(CLI::NonNegativeNumber);
  torus->add_option("--seed", opts.seed, "Seed for random inputs");

  auto* classicalCmd = app.add_subcommand("classical", "Commutative Poisson-geometry oracle");
  classicalCmd->add_option("--surface", copts.surface, "Embedded surface")
      ->check(CLI::IsMember({"sphere", "clifford-torus"}));
  classicalCmd->add_option("--grid", copts.grid, "Grid points per parameter")->check(CLI::PositiveNumber);
  classicalCmd->add_option("--samples", copts.samples, "Quasi-random curvature sample points")
      ->check(CLI::PositiveNumber);
  classicalCmd->add_option("--mode", mode, "Derivative mode")->check(CLI::IsMember({"analytic", "fd"}));
  classicalCmd->add_option("--fd-step", copts.curvature.fdStep, "Finite-difference step")
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Fuzzy sphere sweep over N = 2..max-dim");
  sweep->add_option("--max-dim", maxDim, "Largest representation dimension")->required();
  sweep->add_option("--trials", sweepTrials, "Random trials per identity and N")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--seed", opts.seed, "Seed for random inputs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*sphere) {
      if (dim < 2) throw std::invalid_argument("sphere needs --dim >= 2");
      return emit(runSphereSuite(dim, opts), jsonPath, out, err);
    }
    if (*torus) {
      validateTorusParameters(dim, k);
      return emit(runTorusSuite(dim, k, opts), jsonPath, out, err);
    }
    if (*classicalCmd) {
      copts.curvature.mode = mode == "fd" ? classical::DerivativeMode::FiniteDifference
                                          : classical::DerivativeMode::Analytic;
      return emit(runClassicalSuite(copts, opts), jsonPath, out, err);
    }
    if (*sweep) {
      if (maxDim < 2) throw std::invalid_argument("sweep needs --max-dim >= 2");
      opts.trials = sweepTrials;
      return emit(runSweep(maxDim, opts), jsonPath, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ncgeom::cli
