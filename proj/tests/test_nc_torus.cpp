#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ncgeom/identities.hpp"
#include "ncgeom/nc_torus.hpp"

using namespace ncgeom;

namespace {

const std::pair<int, int> kSweep[] = {{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 2}, {8, 3}, {12, 5}};

}  // namespace

TEST_CASE("parameters at N = 4, k = 1") {
  const auto t = buildNCTorus(4, 1);
  CHECK(t.theta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(std::abs(t.q - Complex(0.0, 1.0)) < 1e-15);
  CHECK(t.hbar == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(worstResidual(torusRelations(t)) <= 1e-12);
  // Clock and shift entries.
  for (int a = 0; a < 4; ++a) CHECK(std::abs(t.U(a, a) - std::pow(Complex(0, 1), a)) < 1e-15);
  for (int a = 0; a < 4; ++a) CHECK(t.V(a, (a + 1) % 4) == Complex(1.0, 0.0));
}

TEST_CASE("hbar at N = 5, k = 1") {
  const auto t = buildNCTorus(5, 1);
  CHECK(t.hbar == doctest::Approx(std::tan(std::numbers::pi / 5)).epsilon(1e-15));
  CHECK(t.hbar == doctest::Approx(0.7265425).epsilon(1e-7));
}

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(buildNCTorus(2, 1), TorusParameterError);
  CHECK_THROWS_AS(buildNCTorus(5, 0), TorusParameterError);
  CHECK_THROWS_AS(buildNCTorus(5, -1), TorusParameterError);
  CHECK_THROWS_AS(buildNCTorus(5, 3), TorusParameterError);
  try {
    validateTorusParameters(4, 2);
    FAIL("expected the pole to be rejected");
  } catch (const TorusParameterError& e) {
    CHECK(std::string(e.what()).find("pole") != std::string::npos);
  }
  CHECK_NOTHROW(validateTorusParameters(12, 5));
}

TEST_CASE("relations across the sweep") {
  for (auto [n, k] : kSweep) {
    const auto t = buildNCTorus(n, k);
    CHECK(worstResidual(torusRelations(t)) <= 1e-11 * std::max(1.0, t.hbar));
    CHECK(residualNamed(torusRelations(t), "reconstruct_U") <= 1e-12);
    CHECK(residualNamed(torusRelations(t), "reconstruct_V") <= 1e-12);
  }
}

TEST_CASE("auxiliary exchange relations") {
  for (auto [n, k] : {std::pair{4, 1}, std::pair{50, 1}, std::pair{7, 3}}) {
    const auto rep = torusCommutationAuxiliary(buildNCTorus(n, k));
    CHECK(rep.size() == 5);
    CHECK(worstResidual(rep) <= 1e-12);
  }
}

TEST_CASE("projectors and ranks") {
  for (auto [n, k] : kSweep) {
    const auto t = buildNCTorus(n, k);
    const auto& g = t.geometry;
    const auto pi = torusPi(t), d = torusD(t);
    CHECK(projectorChecks(g, pi, &d).worst() <= 1e-12);
    CHECK(maxAbsEntry(moduleRank(g, d) - Element::identity(n) * 2.0) <= 1e-12);
    CHECK(maxAbsEntry(moduleRank(g, pi) - Element::identity(n) * 2.0) <= 1e-12);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!sameTorusGroup(i, j)) CHECK(maxAbsEntry(pi(i, j)) == 0.0);
  }
}

TEST_CASE("flatness") {
  for (auto [n, k] : kSweep) {
    const auto rep = torusFlatnessCheck(buildNCTorus(n, k));
    CHECK(residualNamed(rep, "all_components") <= 1e-10);
    CHECK(residualNamed(rep, "scalar_curvature") <= 1e-10);
    CHECK(residualNamed(rep, "q_polynomial_identity") <= 1e-14);
    CHECK(worstResidual(rep) <= 1e-10);
  }
}

TEST_CASE("bases") {
  const auto t = buildNCTorus(7, 2);
  const auto e1 = torusE1(t);
  CHECK(maxAbsEntry(e1[0] + t.X(1)) == 0.0);
  CHECK(maxAbsEntry(e1[1] - t.X(0)) == 0.0);
  const auto np = torusNormalPlus(t), nm = torusNormalMinus(t);
  CHECK(maxAbsEntry(np[2] - t.X(2)) == 0.0);
  CHECK(maxAbsEntry(nm[3] + t.X(3)) == 0.0);

  const auto tb = torusTangentBasisChecks(t, 100, 42);
  CHECK(residualNamed(tb, "D_fixes_E1") <= 1e-12);
  CHECK(residualNamed(tb, "D_fixes_E2") <= 1e-12);
  CHECK(worstResidual(tb) <= 1e-10);
  const auto nb = torusNormalBasisChecks(t, 100, 42);
  CHECK(residualNamed(nb, "Pi_fixes_N_plus") <= 1e-12);
  CHECK(residualNamed(nb, "Pi_fixes_N_minus") <= 1e-12);
  CHECK(worstResidual(nb) <= 1e-10);
  CHECK(worstResidual(torusFrameReconstruction(t, 100, 42)) <= 1e-10);

  // Zero trials leave only the deterministic checks.
  CHECK(residualNamed(torusTangentBasisChecks(t, 0, 1), "spanning") == 0.0);
  CHECK(residualNamed(torusNormalBasisChecks(t, 0, 1), "decomposition") == 0.0);

  const auto e2 = torusE2(t);
  for (const auto* a : {&e1, &e2})
    for (const auto* b : {&np, &nm}) CHECK(maxAbsEntry(metric(*a, *b)) <= 1e-12);
  CHECK(maxAbsEntry(metric(e1, e2)) <= 1e-12);
  CHECK(maxAbsEntry(metric(np, nm)) <= 1e-12);
}

TEST_CASE("closed trace") {
  for (auto [n, k] : kSweep) {
    const auto t = buildNCTorus(n, k);
    const auto rep = torusClosedTraceCheck(t, 20, 5);
    for (int kk = 1; kk <= 4; ++kk) CHECK(residualNamed(rep, "sum_X_Pi_k" + std::to_string(kk)) <= 1e-12);
    CHECK(residualNamed(rep, "cross_group_Pi_blocks") == 0.0);
    CHECK(residualNamed(rep, "closedness_defect") <= 1e-10);
    CHECK(residualNamed(rep, "defect_equivalence") <= 1e-10);
  }
}
