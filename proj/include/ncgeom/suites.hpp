#pragma once

// Batch verification suites: each builds a geometry, runs every residual
// check on it and packages the results with tolerances and anchors.

#include <cstdint>
#include <string>

#include "ncgeom/classical.hpp"
#include "ncgeom/report.hpp"

namespace ncgeom {

struct SuiteOptions {
  double atol = 1e-10;
  double rtol = 1e-10;
  int trials = 100;
  std::uint64_t seed = 42;

  /// atol + rtol * scale
  double tolerance(double scale = 1.0) const { return atol + rtol * scale; }
};

struct ClassicalOptions {
  std::string surface = "sphere";
  int grid = 32;
  int samples = 20;
  classical::CurvatureOptions curvature;
  /// fd-mode thresholds for the curvature checks
  double fdSphereTolerance = 1e-4;
  double fdTorusTolerance = 1e-6;
};

SuiteReport runSphereSuite(int N, const SuiteOptions& opts = {});
SuiteReport runTorusSuite(int N, int k, const SuiteOptions& opts = {});
SuiteReport runClassicalSuite(const ClassicalOptions& copts, const SuiteOptions& opts = {});

/// Fuzzy sphere for N = 2..maxDim: one row check per N carrying hbar, S(N)
/// and |S(N) - 2|, the full sphere suite verdict per N, the convergence gap
/// against 3 hbar^2 - hbar^4, and strict monotonicity of S(N).
SuiteReport runSweep(int maxDim, const SuiteOptions& opts = {});

}  // namespace ncgeom
