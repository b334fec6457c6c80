#include "doctest.h"

#include <cmath>

#include "naive_oracle.hpp"
#include "ncgeom/fuzzy_sphere.hpp"
#include "ncgeom/identities.hpp"
#include "ncgeom/module.hpp"
#include "ncgeom/nc_torus.hpp"

using namespace ncgeom;

namespace {

double distance(const Element& a, const oracle::Mat& b) {
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

ModuleOperator randomOperator(int m, int dim, std::uint64_t seed) {
  std::vector<Element> blocks;
  for (int b = 0; b < m * m; ++b) blocks.push_back(randomElement(dim, seed * 100 + b));
  return ModuleOperator(m, blocks);
}

ModuleVector sphereNormalVector(const FuzzySphere& fs) {
  return ModuleVector({fs.X(0), fs.X(1), fs.X(2)});
}

}  // namespace

TEST_CASE("metric examples") {
  const auto fs = buildFuzzySphere(4);
  const auto e1 = ModuleVector::basis(3, 0, Element::identity(4));
  CHECK(maxAbsEntry(metric(e1, e1) - Element::identity(4)) == 0.0);

  const auto u = randomModuleVector(fs.geometry, 1), v = randomModuleVector(fs.geometry, 2);
  CHECK(maxAbsEntry(metric(u, v) - metric(v, u).adjoint()) < 1e-14);

  const auto x = sphereNormalVector(fs);
  CHECK(maxAbsEntry(metric(x, x) - Element::identity(4)) < 1e-13);

  CHECK_THROWS_AS(metric(e1, ModuleVector::zero(4, 4)), GeometryMismatch);
  CHECK_THROWS_AS(metric(e1, ModuleVector::zero(3, 5)), GeometryMismatch);
}

TEST_CASE("derivation examples") {
  const auto fs = buildFuzzySphere(5);
  const auto& g = fs.geometry;
  for (int i = 0; i < 3; ++i) {
    CHECK(maxAbsEntry(derivation(g, i, Element::identity(5))) == 0.0);
    CHECK(maxAbsEntry(derivation(g, i, fs.X(i))) < 1e-15);
  }
  // d^1(X^2) = eps^{12k} X^k = X^3
  CHECK(maxAbsEntry(derivation(g, 0, fs.X(1)) - fs.X(2)) < 1e-13);
  CHECK(maxAbsEntry(derivation(g, 1, fs.X(0)) + fs.X(2)) < 1e-13);
  CHECK(maxAbsEntry(innerDerivation(g, fs.X(2), fs.X(0)) - fs.X(1)) < 1e-13);
}

TEST_CASE("ambient connection") {
  const auto fs = buildFuzzySphere(3);
  const auto& g = fs.geometry;
  for (int k = 0; k < 3; ++k) {
    const auto ek = ModuleVector::basis(3, k, Element::identity(3));
    for (int i = 0; i < 3; ++i) CHECK(maxAbsEntry(ambientConnection(g, i, ek)) == 0.0);
  }
  // Leibniz rule against a direct evaluation.
  const auto u = randomModuleVector(g, 4);
  const Element a = randomElement(3, 99);
  for (int i = 0; i < 3; ++i) {
    const auto lhs = ambientConnection(g, i, u * a);
    const auto rhs = ambientConnection(g, i, u) * a + u * derivation(g, i, a);
    CHECK(maxAbsEntry(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("tangent connection") {
  const auto fs = buildFuzzySphere(2);
  const auto& g = fs.geometry;
  CHECK(maxAbsEntry(tangentConnection(g, 0, ModuleVector::zero(3, 2))) == 0.0);
  const auto u = randomTangentVector(g, 8);
  for (int i = 0; i < 3; ++i) {
    const auto w = tangentConnection(g, i, u);
    CHECK(maxAbsEntry(g.tangentProjector().apply(w) - w) < 1e-13);
    CHECK(maxAbsEntry(w - g.tangentProjector().apply(ambientConnection(g, i, u))) == 0.0);
  }
  const auto v = randomTangentVector(g, 9);
  for (int i = 0; i < 3; ++i)
    CHECK(maxAbsEntry(metricCompatibilityDefect(g, i, u, v, ConnectionKind::Tangent)) <= 1e-10);

  CHECK_THROWS_AS(tangentConnection(g, 0, sphereNormalVector(fs)), NotTangent);
  CHECK_THROWS_AS(metricCompatibilityDefect(g, 0, sphereNormalVector(fs), v,
                                            ConnectionKind::Tangent),
                  NotTangent);
}

TEST_CASE("inner connection") {
  const auto fs = buildFuzzySphere(4);
  const auto& g = fs.geometry;
  const auto u = randomTangentVector(g, 3);
  CHECK(maxAbsEntry(innerConnection(g, Element::identity(4), u)) == 0.0);
  for (int i = 0; i < 3; ++i)
    CHECK(maxAbsEntry(innerConnection(g, fs.X(i), u) - tangentConnection(g, i, u)) < 1e-14);
  CHECK(derivationJacobi(g, 10, 5) < 1e-11);
}

TEST_CASE("metric compatibility") {
  for (int n : {2, 3, 6}) {
    const auto fs = buildFuzzySphere(n);
    const auto& g = fs.geometry;
    const auto z = ModuleVector::zero(3, n);
    CHECK(maxAbsEntry(metricCompatibilityDefect(g, 1, z, z)) == 0.0);
    CHECK(metricCompatibility(g, ConnectionKind::Ambient, 20, 1) < 1e-11);
    CHECK(metricCompatibility(g, ConnectionKind::Tangent, 20, 1) < 1e-11);
  }
  const auto t = buildNCTorus(5, 2);
  CHECK(metricCompatibility(t.geometry, ConnectionKind::Ambient, 20, 1) < 1e-11);
  CHECK(metricCompatibility(t.geometry, ConnectionKind::Tangent, 20, 1) < 1e-11);
}

TEST_CASE("affine connection axioms and star derivation") {
  const auto fs = buildFuzzySphere(5);
  const auto t = buildNCTorus(6, 1);
  for (const Geometry* g : {&fs.geometry, &t.geometry}) {
    for (auto kind : {ConnectionKind::Ambient, ConnectionKind::Tangent}) {
      const auto rep = affineConnectionAxioms(*g, kind, 10, 17);
      CHECK(rep.size() == 4);
      CHECK(worstResidual(rep) < 1e-11);
    }
    CHECK(starDerivation(*g, 10, 3) < 1e-12);
    CHECK(leibnizCancellation(*g, 10, 3) < 1e-11);
  }
}

TEST_CASE("poisson operator") {
  const auto fs = buildFuzzySphere(4);
  const auto p = poissonOperator(fs.geometry);
  for (int i = 0; i < 3; ++i) {
    CHECK(maxAbsEntry(p(i, i)) == 0.0);
    for (int j = 0; j < 3; ++j) {
      Element expect = Element::zero(4);
      for (int k = 0; k < 3; ++k) expect += fs.X(k) * static_cast<double>(levi_civita(i, j, k));
      CHECK(maxAbsEntry(p(i, j) - expect) < 1e-13);
    }
  }
  const auto t = buildNCTorus(5, 1);
  const auto pt = poissonOperator(t.geometry);
  CHECK(maxAbsEntry(pt(0, 1)) < 1e-15);
  CHECK(maxAbsEntry(pt(2, 3)) < 1e-15);
}

TEST_CASE("curvature tensor matches the naive oracle") {
  for (int n : {2, 3, 5}) {
    const auto fs = buildFuzzySphere(n);
    const auto r = curvatureTensor(fs.geometry);
    const auto ref = oracle::curvature(oracle::sphere(n));
    double worst = 0.0;
    for (std::size_t c = 0; c < ref.size(); ++c) worst = std::max(worst, distance(r.components()[c], ref[c]));
    CHECK(worst < 1e-12);
    CHECK(curvatureAntisymmetry(r) <= 1e-15);
  }
  for (auto [n, k] : {std::pair{4, 1}, std::pair{5, 2}}) {
    const auto t = buildNCTorus(n, k);
    const auto r = curvatureTensor(t.geometry);
    const auto og = oracle::torus(n, k);
    CHECK(std::abs(og.hbar - t.hbar) < 1e-15);
    for (int i = 0; i < 4; ++i) CHECK(distance(t.X(i), og.x[i]) < 1e-15);
    const auto ref = oracle::curvature(og);
    double worst = 0.0;
    for (std::size_t c = 0; c < ref.size(); ++c) worst = std::max(worst, distance(r.components()[c], ref[c]));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("scalar curvature") {
  // N = 3: hbar^2 = 1/2, 2 - 3/2 + 1/4 = 3/4. N = 2: hbar^2 = 4/3, 2 - 4 + 16/9 = -2/9.
  const std::pair<int, double> cases[] = {{2, -2.0 / 9.0}, {3, 0.75}};
  for (auto [n, s] : cases) {
    const auto fs = buildFuzzySphere(n);
    const Element got = scalarCurvature(fs.geometry);
    CHECK(maxAbsEntry(got - Element::identity(n) * s) < 1e-12);
    CHECK(distance(got, oracle::scalar(oracle::sphere(n))) < 1e-12);
  }
  const auto t = buildNCTorus(4, 1);
  CHECK(maxAbsEntry(scalarCurvature(t.geometry)) < 1e-12);
  CHECK(distance(scalarCurvature(t.geometry), oracle::scalar(oracle::torus(4, 1))) < 1e-12);
}

TEST_CASE("curvature operator") {
  const auto fs = buildFuzzySphere(3);
  const auto& g = fs.geometry;
  const auto r = curvatureTensor(g);
  const auto u = randomTangentVector(g, 21);
  for (int i = 0; i < 3; ++i) CHECK(maxAbsEntry(curvatureOperator(g, i, i, u)) < 1e-13);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(maxAbsEntry(curvatureOperator(g, i, j, u) - contractCurvature(r, i, j, u)) < 1e-11);
  CHECK(curvatureOperatorAgreement(g, r, 5, 2) < 1e-11);
  CHECK_THROWS_AS(curvatureOperator(g, 0, 1, sphereNormalVector(fs)), NotTangent);

  const auto t = buildNCTorus(5, 1);
  const auto ut = randomTangentVector(t.geometry, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(maxAbsEntry(curvatureOperator(t.geometry, i, j, ut)) < 1e-11);
}

TEST_CASE("divergence and closedness") {
  const auto fs = buildFuzzySphere(4);
  const auto& g = fs.geometry;
  const auto z = ModuleVector::zero(3, 4);
  CHECK(maxAbsEntry(divergence(g, z)) == 0.0);
  CHECK(std::abs(closednessDefect(g, z)) == 0.0);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto u = randomTangentVector(g, s);
    const Complex tr = normalizedTrace(divergence(g, u));
    CHECK(std::abs(tr) < 1e-12);
    CHECK(std::abs(closednessDefect(g, u) - kI * g.hbar() * tr) < 1e-12);
  }
  CHECK_THROWS_AS(divergence(g, sphereNormalVector(fs)), NotTangent);
  CHECK_THROWS_AS(closednessDefect(g, sphereNormalVector(fs)), NotTangent);

  const auto rep = closedTraceResiduals(g, 20, 3);
  CHECK(residualNamed(rep, "closedness_defect") < 1e-12);
  CHECK(residualNamed(rep, "defect_equivalence") < 1e-12);
}

TEST_CASE("projector checks and module rank") {
  const auto id = ModuleOperator::identity(3, 4);
  const auto fs = buildFuzzySphere(4);
  const auto& g = fs.geometry;
  const auto r = projectorChecks(g, id);
  CHECK(r.idempotence == 0.0);
  CHECK(r.symmetry == 0.0);
  CHECK_FALSE(r.complement.has_value());
  CHECK(maxAbsEntry(moduleRank(g, id) - Element::identity(4) * 3.0) == 0.0);

  const auto d = g.tangentProjector(), pi = g.normalProjector();
  const auto pd = projectorChecks(g, d, &pi);
  CHECK(pd.worst() < 1e-12);
  CHECK(*pd.complement < 1e-12);
  CHECK(*pd.orthogonality < 1e-12);
  CHECK(maxAbsEntry(moduleRank(g, d) - Element::identity(4) * 2.0) < 1e-12);
  CHECK(maxAbsEntry(moduleRank(g, pi) - Element::identity(4)) < 1e-12);

  const auto junk = randomOperator(3, 4, 5);
  ProjectorResiduals bad;
  CHECK_NOTHROW(bad = projectorChecks(g, junk));
  CHECK(bad.idempotence > 0.1);
  CHECK_THROWS_AS(moduleRank(g, junk), NotAProjector);
}

TEST_CASE("geometry construction is validated") {
  const auto fs = buildFuzzySphere(3);
  std::vector<Element> xs = fs.geometry.generators();
  CHECK_THROWS_AS(Geometry(xs, 0.0, fs.geometry.tangentProjector()), std::invalid_argument);
  CHECK_THROWS_AS(Geometry(xs, 1.0, randomOperator(3, 3, 1)), NotAProjector);
  CHECK_THROWS_AS(Geometry(xs, 1.0, ModuleOperator::identity(2, 3)), GeometryMismatch);
  std::vector<Element> nonHermitian = xs;
  nonHermitian[0] = randomElement(3, 4);
  CHECK_THROWS_AS(Geometry(nonHermitian, 1.0, ModuleOperator::identity(3, 3)),
                  std::invalid_argument);
  CHECK_NOTHROW(Geometry(xs, 1.0, ModuleOperator::identity(3, 3)));
}

TEST_CASE("module vectors and operators") {
  const auto a = randomElement(3, 1), b = randomElement(3, 2);
  const ModuleVector u({a, b});
  CHECK(u.rank() == 2);
  CHECK(u.dim() == 3);
  CHECK(maxAbsEntry((u * kI)[1] - b * kI) == 0.0);
  const ModuleOperator t(2, {a, b, b, a});
  const auto tu = t.apply(u);
  CHECK(maxAbsEntry(tu[0] - (a * a + b * b)) < 1e-14);
  CHECK(maxAbsEntry(tu[1] - (b * a + a * b)) < 1e-14);
  const auto tt = t.compose(t);
  CHECK(maxAbsEntry(tt.apply(u) - t.apply(t.apply(u))) < 1e-13);
  CHECK_THROWS_AS(ModuleOperator(2, {a, b, a}), std::invalid_argument);
  CHECK_THROWS_AS(ModuleVector({a, Element::identity(4)}), DimensionMismatch);
}
