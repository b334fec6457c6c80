#include "ncgeom/identities.hpp"

#include <algorithm>
#include <cmath>

namespace ncgeom {

namespace {

ModuleVector derivativeAlong(const Geometry& g, const Element& b, const ModuleVector& u) {
  std::vector<Element> out;
  out.reserve(u.rank());
  for (const auto& c : u.components()) out.push_back(innerDerivation(g, b, c));
  return ModuleVector(std::move(out));
}

// Connection along the inner derivation a -> [b, a] / (i hbar).
ModuleVector connectionAlong(const Geometry& g, ConnectionKind kind, const Element& b,
                             const ModuleVector& u) {
  if (kind == ConnectionKind::Tangent) {
    g.requireTangent(u);
    return innerConnection(g, b, u);
  }
  return derivativeAlong(g, b, u);
}

ModuleVector randomInput(const Geometry& g, ConnectionKind kind, std::uint64_t seed) {
  return kind == ConnectionKind::Tangent ? randomTangentVector(g, seed)
                                         : randomModuleVector(g, seed);
}

}  // namespace

double curvatureOperatorAgreement(const Geometry& g, const CurvatureTensor& r, int trials,
                                  std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ModuleVector u = randomTangentVector(g, seed + t);
    for (int i = 0; i < g.rank(); ++i) {
      for (int j = 0; j < g.rank(); ++j) {
        worst = std::max(worst, maxAbsEntry(curvatureOperator(g, i, j, u) -
                                            contractCurvature(r, i, j, u)));
      }
    }
  }
  return worst;
}

double leibnizCancellation(const Geometry& g, int trials, std::uint64_t seed) {
  const int m = g.rank();
  const ModuleOperator& d = g.tangentProjector();
  // dD[(i * m + k) * m + l] = d^i(D^{kl})
  std::vector<Element> dD;
  dD.reserve(m * m * m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < m; ++l) dD.push_back(derivation(g, i, d(k, l)));
    }
  }
  auto at = [&](int i, int k, int l) -> const Element& { return dD[(i * m + k) * m + l]; };

  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ModuleVector u = randomTangentVector(g, seed + t);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const ModuleVector du = ambientConnection(g, j, u);
        // inner[l] = sum_n d^i(D^{ln}) d^j(U^n),  tail[l] = sum_n d^j(D^{ln}) U^n
        std::vector<Element> inner, tail;
        for (int l = 0; l < m; ++l) {
          Element a = Element::zero(g.dim());
          Element b = Element::zero(g.dim());
          for (int n = 0; n < m; ++n) {
            a += at(i, l, n) * du[n];
            b += at(j, l, n) * u[n];
          }
          inner.push_back(std::move(a));
          tail.push_back(std::move(b));
        }
        for (int k = 0; k < m; ++k) {
          Element lhs = Element::zero(g.dim());
          Element rhs = Element::zero(g.dim());
          for (int l = 0; l < m; ++l) {
            lhs += d(k, l) * inner[l];
            rhs += at(i, k, l) * tail[l];
          }
          worst = std::max(worst, maxAbsEntry(lhs - rhs));
        }
      }
    }
  }
  return worst;
}

double derivationJacobi(const Geometry& g, int trials, std::uint64_t seed) {
  const int m = g.rank();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Element a = randomElement(g.dim(), seed + t);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const Element pij = derivation(g, i, g.generator(j));
        const Element lhs =
            derivation(g, i, derivation(g, j, a)) - derivation(g, j, derivation(g, i, a));
        worst = std::max(worst, maxAbsEntry(lhs - innerDerivation(g, pij, a)));
      }
    }
  }
  return worst;
}

double starDerivation(const Geometry& g, int trials, std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Element a = randomElement(g.dim(), seed + t);
    for (int i = 0; i < g.rank(); ++i) {
      worst = std::max(worst,
                       maxAbsEntry(derivation(g, i, a).adjoint() - derivation(g, i, a.adjoint())));
    }
  }
  return worst;
}

ResidualReport affineConnectionAxioms(const Geometry& g, ConnectionKind kind, int trials,
                                      std::uint64_t seed) {
  const int m = g.rank();
  double additivity = 0.0;
  double homogeneity = 0.0;
  double derivationSum = 0.0;
  double leibniz = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = 3 * (seed + t);
    const ModuleVector u = randomInput(g, kind, s);
    const ModuleVector v = randomInput(g, kind, s + 1);
    const Element a = randomElement(g.dim(), s + 2);
    // real scalar in [-2, 2) tied to the trial
    const double c = -2.0 + 4.0 * std::fmod(0.6180339887498949 * (t + 1), 1.0);
    for (int i = 0; i < m; ++i) {
      const Element& xi = g.generator(i);
      const Element& xj = g.generator((i + 1) % m);
      const ModuleVector nu = connectionAlong(g, kind, xi, u);
      const ModuleVector nv = connectionAlong(g, kind, xi, v);
      additivity = std::max(additivity, maxAbsEntry(connectionAlong(g, kind, xi, u + v) - (nu + nv)));
      homogeneity = std::max(homogeneity,
                             maxAbsEntry(connectionAlong(g, kind, xi * c, u) - nu * Complex{c, 0.0}));
      derivationSum = std::max(
          derivationSum, maxAbsEntry(connectionAlong(g, kind, xi + xj, u) -
                                     (nu + connectionAlong(g, kind, xj, u))));
      const ModuleVector ua = u * a;
      leibniz = std::max(leibniz, maxAbsEntry(connectionAlong(g, kind, xi, ua) -
                                              (nu * a + u * derivation(g, i, a))));
    }
  }
  return {
      {"additivity", additivity},
      {"real_homogeneity", homogeneity},
      {"derivation_additivity", derivationSum},
      {"leibniz", leibniz},
  };
}

double metricCompatibility(const Geometry& g, ConnectionKind kind, int trials, std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ModuleVector u = randomInput(g, kind, 2 * (seed + t));
    const ModuleVector v = randomInput(g, kind, 2 * (seed + t) + 1);
    for (int i = 0; i < g.rank(); ++i) {
      worst = std::max(worst, maxAbsEntry(metricCompatibilityDefect(g, i, u, v, kind)));
    }
  }
  return worst;
}

ResidualReport closedTraceResiduals(const Geometry& g, int trials, std::uint64_t seed) {
  double defect = 0.0;
  double equivalence = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ModuleVector u = randomTangentVector(g, seed + t);
    const Complex c = closednessDefect(g, u);
    const Complex traceDiv = normalizedTrace(divergence(g, u));
    defect = std::max({defect, std::abs(c), std::abs(traceDiv)});
    equivalence = std::max(equivalence, std::abs(c - kI * g.hbar() * traceDiv));
  }
  return {{"closedness_defect", defect}, {"defect_equivalence", equivalence}};
}

double curvatureAntisymmetry(const CurvatureTensor& r) {
  const int m = r.rank();
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          worst = std::max(worst, maxAbsEntry(r(i, j, k, l) + r(j, i, k, l)));
        }
      }
    }
  }
  return worst;
}

double tensorDistance(const CurvatureTensor& a, const CurvatureTensor& b) {
  if (a.rank() != b.rank()) throw GeometryMismatch("curvature tensors of different rank");
  double worst = 0.0;
  for (std::size_t n = 0; n < a.components().size(); ++n) {
    worst = std::max(worst, maxAbsEntry(a.components()[n] - b.components()[n]));
  }
  return worst;
}

}  // namespace ncgeom
