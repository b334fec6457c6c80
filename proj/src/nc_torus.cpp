#include "ncgeom/nc_torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ncgeom/identities.hpp"

namespace ncgeom {

namespace {

const double kInvTwoSqrt2 = 1.0 / (2.0 * std::numbers::sqrt2);

Element clockMatrix(int N, int k) {
  Matrix u = Matrix::Zero(N, N);
  for (int a = 0; a < N; ++a) {
    // reduce the exponent first so the phase is exact for every a
    const double phase = 2.0 * std::numbers::pi * static_cast<double>((a * k) % N) / N;
    u(a, a) = std::polar(1.0, phase);
  }
  return Element(std::move(u));
}

Element shiftMatrix(int N) {
  Matrix v = Matrix::Zero(N, N);
  for (int a = 0; a < N; ++a) v(a, (a + 1) % N) = 1.0;
  return Element(std::move(v));
}

std::vector<Element> torusGenerators(const Element& u, const Element& v) {
  const Element ud = u.adjoint();
  const Element vd = v.adjoint();
  return {
      (ud + u) * kInvTwoSqrt2,
      (ud - u) * (kI * kInvTwoSqrt2),
      (vd + v) * kInvTwoSqrt2,
      (vd - v) * (kI * kInvTwoSqrt2),
  };
}

ModuleOperator normalProjectorFrom(const std::vector<Element>& x) {
  const int n = x.front().dim();
  std::vector<Element> blocks;
  blocks.reserve(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      blocks.push_back(sameTorusGroup(i, j) ? x[i] * x[j] * 2.0 : Element::zero(n));
    }
  }
  return ModuleOperator(4, std::move(blocks));
}

ModuleVector vectorOf(Element a, Element b, Element c, Element d) {
  return ModuleVector({std::move(a), std::move(b), std::move(c), std::move(d)});
}

}  // namespace

void validateTorusParameters(int N, int k) {
  if (N < 3) throw TorusParameterError("torus needs N >= 3, got " + std::to_string(N));
  if (k <= 0) throw TorusParameterError("torus needs k > 0 (k = 0 gives hbar = 0)");
  if (2 * k == N) throw TorusParameterError("theta = pi/2 is the pole of hbar = tan(theta)");
  if (2 * k > N) throw TorusParameterError("torus needs 2k < N so that theta lies in (0, pi/2)");
}

NCTorus buildNCTorus(int N, int k) {
  validateTorusParameters(N, k);
  const double theta = std::numbers::pi * k / N;
  const double hbar = std::tan(theta);
  Element u = clockMatrix(N, k);
  Element v = shiftMatrix(N);
  auto x = torusGenerators(u, v);
  ModuleOperator d = ModuleOperator::identity(4, N) - normalProjectorFrom(x);
  Geometry g(std::move(x), hbar, std::move(d));
  return NCTorus{N, k, theta, std::polar(1.0, 2.0 * theta), hbar, std::move(u), std::move(v),
                 std::move(g)};
}

ModuleOperator torusPi(const NCTorus& t) { return normalProjectorFrom(t.geometry.generators()); }

ModuleOperator torusD(const NCTorus& t) { return ModuleOperator::identity(4, t.N) - torusPi(t); }

ResidualReport torusRelations(const NCTorus& t) {
  const auto& X = t.geometry.generators();
  const Complex ih = kI * t.hbar;
  const Element one = Element::identity(t.N);
  auto anti = [](const Element& a, const Element& b) { return a * b + b * a; };

  double herm = 0.0;
  for (const auto& x : X) herm = std::max(herm, maxAbsEntry(x.adjoint() - x));

  return {
      {"commute_12", maxAbsEntry(commutator(X[0], X[1]))},
      {"commute_34", maxAbsEntry(commutator(X[2], X[3]))},
      {"bracket_13", maxAbsEntry(commutator(X[0], X[2]) - anti(X[1], X[3]) * ih)},
      {"bracket_24", maxAbsEntry(commutator(X[1], X[3]) - anti(X[0], X[2]) * ih)},
      {"bracket_14", maxAbsEntry(commutator(X[0], X[3]) + anti(X[1], X[2]) * ih)},
      {"bracket_23", maxAbsEntry(commutator(X[1], X[2]) + anti(X[0], X[3]) * ih)},
      {"sum_squares_12", maxAbsEntry(X[0] * X[0] + X[1] * X[1] - one * 0.5)},
      {"sum_squares_34", maxAbsEntry(X[2] * X[2] + X[3] * X[3] - one * 0.5)},
      {"hermiticity", herm},
      {"unitarity_U", maxAbsEntry(t.U * t.U.adjoint() - one)},
      {"unitarity_V", maxAbsEntry(t.V * t.V.adjoint() - one)},
      {"vu_quv", maxAbsEntry(t.V * t.U - t.U * t.V * t.q)},
      {"reconstruct_U", maxAbsEntry((X[0] + X[1] * kI) * std::numbers::sqrt2 - t.U)},
      {"reconstruct_V", maxAbsEntry((X[2] + X[3] * kI) * std::numbers::sqrt2 - t.V)},
  };
}

ResidualReport torusCommutationAuxiliary(const NCTorus& t) {
  const auto& X = t.geometry.generators();
  const double c = std::cos(2.0 * t.theta);
  const Complex is{0.0, std::sin(2.0 * t.theta)};

  // Right-hand sides in terms of the ordered products X^aX^b with a in {1,2}, b in {3,4}.
  const Element x13 = X[0] * X[2];
  const Element x14 = X[0] * X[3];
  const Element x23 = X[1] * X[2];
  const Element x24 = X[1] * X[3];
  const Element x31 = x13 * c - x24 * is;
  const Element x42 = x24 * c - x13 * is;
  const Element x41 = x14 * c + x23 * is;
  const Element x32 = x23 * c + x14 * is;

  // VU = 2 (X3 + i X4)(X1 + i X2) rewritten through the exchange relations.
  const Element vu = (x31 + x32 * kI + x41 * kI - x42) * 2.0;
  const Element quv = (x13 + x14 * kI + x23 * kI - x24) * (2.0 * t.q);

  return {
      {"exchange_31", maxAbsEntry(X[2] * X[0] - x31)},
      {"exchange_42", maxAbsEntry(X[3] * X[1] - x42)},
      {"exchange_41", maxAbsEntry(X[3] * X[0] - x41)},
      {"exchange_32", maxAbsEntry(X[2] * X[1] - x32)},
      {"exchange_implies_vu_quv", maxAbsEntry(vu - quv)},
  };
}

ResidualReport torusFlatnessCheck(const NCTorus& t) {
  const Geometry& g = t.geometry;
  const CurvatureTensor r = curvatureTensor(g);
  auto barred = [](int i) { return i >= 2; };

  double all = 0.0;
  double mixedPair = 0.0;
  double unbarredK = 0.0;
  double unbarredL = 0.0;
  double barredK = 0.0;
  double barredL = 0.0;
  double remaining = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          const double v = maxAbsEntry(r(i, j, k, l));
          all = std::max(all, v);
          if (!sameTorusGroup(i, j)) {
            mixedPair = std::max(mixedPair, v);
            continue;
          }
          const bool pairBarred = barred(i);
          if (!pairBarred && !barred(k)) unbarredK = std::max(unbarredK, v);
          if (!pairBarred && !barred(l)) unbarredL = std::max(unbarredL, v);
          if (pairBarred && barred(k)) barredK = std::max(barredK, v);
          if (pairBarred && barred(l)) barredL = std::max(barredL, v);
          if (pairBarred != barred(k) && pairBarred != barred(l)) {
            remaining = std::max(remaining, v);
          }
        }
      }
    }
  }

  const Complex q2 = t.q * t.q;
  const Complex qb2 = std::conj(q2);
  const Complex mid = q2 + qb2 - 2.0;
  const double qPoly = std::max(std::abs(q2 * (1.0 - qb2) * (1.0 - qb2) - mid),
                                std::abs(qb2 * (1.0 - q2) * (1.0 - q2) - mid));

  return {
      {"all_components", all},
      {"mixed_pair", mixedPair},
      {"unbarred_pair_unbarred_k", unbarredK},
      {"unbarred_pair_unbarred_l", unbarredL},
      {"barred_pair_barred_k", barredK},
      {"barred_pair_barred_l", barredL},
      {"cross_group_remaining", remaining},
      {"scalar_curvature", maxAbsEntry(scalarCurvature(g, r))},
      {"q_polynomial_identity", qPoly},
  };
}

ModuleVector torusE1(const NCTorus& t) {
  const Element z = Element::zero(t.N);
  return vectorOf(-t.X(1), t.X(0), z, z);
}

ModuleVector torusE2(const NCTorus& t) {
  const Element z = Element::zero(t.N);
  return vectorOf(z, z, -t.X(3), t.X(2));
}

ModuleVector torusNormalPlus(const NCTorus& t) { return vectorOf(t.X(0), t.X(1), t.X(2), t.X(3)); }

ModuleVector torusNormalMinus(const NCTorus& t) {
  return vectorOf(t.X(0), t.X(1), -t.X(2), -t.X(3));
}

ResidualReport torusTangentBasisChecks(const NCTorus& t, int trials, std::uint64_t seed) {
  const Geometry& g = t.geometry;
  const ModuleOperator& d = g.tangentProjector();
  const ModuleVector e1 = torusE1(t);
  const ModuleVector e2 = torusE2(t);
  const Element one = Element::identity(t.N);
  const Element halfNorm12 = (t.X(0) * t.X(0) + t.X(1) * t.X(1)) * 2.0;
  const Element halfNorm34 = (t.X(2) * t.X(2) + t.X(3) * t.X(3)) * 2.0;

  double spanning = 0.0;
  double independence = 0.0;
  double recovery = 0.0;
  for (int n = 0; n < trials; ++n) {
    const ModuleVector w = randomModuleVector(g, seed + n);
    const Element a = (t.X(0) * w[1] - t.X(1) * w[0]) * 2.0;
    const Element b = (t.X(2) * w[3] - t.X(3) * w[2]) * 2.0;
    spanning = std::max(spanning, maxAbsEntry(d.apply(w) - (e1 * a + e2 * b)));

    const Element ra = randomElement(t.N, 2 * (seed + n));
    const Element rb = randomElement(t.N, 2 * (seed + n) + 1);
    independence = std::max({independence, maxAbsEntry(ra - halfNorm12 * ra),
                             maxAbsEntry(rb - halfNorm34 * rb)});

    // read the coefficients back off E1 a + E2 b
    const ModuleVector comb = e1 * ra + e2 * rb;
    const Element backA = (t.X(0) * comb[1] - t.X(1) * comb[0]) * 2.0;
    const Element backB = (t.X(2) * comb[3] - t.X(3) * comb[2]) * 2.0;
    recovery = std::max({recovery, maxAbsEntry(backA - ra), maxAbsEntry(backB - rb)});
  }
  return {
      {"D_fixes_E1", maxAbsEntry(d.apply(e1) - e1)},
      {"D_fixes_E2", maxAbsEntry(d.apply(e2) - e2)},
      {"spanning", spanning},
      {"independence", std::max(independence, maxAbsEntry(halfNorm12 - one))},
      {"coefficient_recovery", recovery},
  };
}

ResidualReport torusNormalBasisChecks(const NCTorus& t, int trials, std::uint64_t seed) {
  const Geometry& g = t.geometry;
  const ModuleOperator& pi = g.normalProjector();
  const ModuleVector np = torusNormalPlus(t);
  const ModuleVector nm = torusNormalMinus(t);
  const ModuleVector e1 = torusE1(t);
  const ModuleVector e2 = torusE2(t);

  double decomposition = 0.0;
  double freeness = 0.0;
  for (int n = 0; n < trials; ++n) {
    const ModuleVector v = pi.apply(randomModuleVector(g, seed + n));
    const Element a = (t.X(0) * v[0] + t.X(1) * v[1]) * 2.0;
    const Element b = (t.X(2) * v[2] + t.X(3) * v[3]) * 2.0;
    const ModuleVector form = vectorOf(t.X(0) * a, t.X(1) * a, t.X(2) * b, t.X(3) * b);
    // the same element in the N_pm basis
    const ModuleVector basis = np * ((a + b) * 0.5) + nm * ((a - b) * 0.5);
    decomposition = std::max({decomposition, maxAbsEntry(v - form), maxAbsEntry(v - basis)});

    const Element ra = randomElement(t.N, seed + n);
    Element back = Element::zero(t.N);
    for (int alpha = 0; alpha < 2; ++alpha) back += t.X(alpha) * (t.X(alpha) * ra);
    Element backBar = Element::zero(t.N);
    for (int alpha = 2; alpha < 4; ++alpha) backBar += t.X(alpha) * (t.X(alpha) * ra);
    freeness = std::max({freeness, maxAbsEntry(ra - back * 2.0), maxAbsEntry(ra - backBar * 2.0)});
  }

  double orthogonality = 0.0;
  const ModuleVector* frame[] = {&e1, &e2, &np, &nm};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      orthogonality = std::max(orthogonality, maxAbsEntry(metric(*frame[i], *frame[j])));
    }
  }

  return {
      {"Pi_fixes_N_plus", maxAbsEntry(pi.apply(np) - np)},
      {"Pi_fixes_N_minus", maxAbsEntry(pi.apply(nm) - nm)},
      {"decomposition", decomposition},
      {"freeness", freeness},
      {"orthogonality", orthogonality},
  };
}

ResidualReport torusFrameReconstruction(const NCTorus& t, int trials, std::uint64_t seed) {
  const Geometry& g = t.geometry;
  const ModuleVector e1 = torusE1(t);
  const ModuleVector e2 = torusE2(t);
  const ModuleVector np = torusNormalPlus(t);
  const ModuleVector nm = torusNormalMinus(t);
  double worst = 0.0;
  for (int n = 0; n < trials; ++n) {
    const ModuleVector w = randomModuleVector(g, seed + n);
    const Element ta = (t.X(0) * w[1] - t.X(1) * w[0]) * 2.0;
    const Element tb = (t.X(2) * w[3] - t.X(3) * w[2]) * 2.0;
    const Element na = (t.X(0) * w[0] + t.X(1) * w[1]) * 2.0;
    const Element nb = (t.X(2) * w[2] + t.X(3) * w[3]) * 2.0;
    const ModuleVector rebuilt =
        e1 * ta + e2 * tb + np * ((na + nb) * 0.5) + nm * ((na - nb) * 0.5);
    worst = std::max(worst, maxAbsEntry(w - rebuilt));
  }
  return {{"frame_reconstruction", worst}};
}

ResidualReport torusClosedTraceCheck(const NCTorus& t, int trials, std::uint64_t seed) {
  const Geometry& g = t.geometry;
  const ModuleOperator& pi = g.normalProjector();

  ResidualReport out;
  for (int k = 0; k < 4; ++k) {
    Element acc = Element::zero(t.N);
    for (int i = 0; i < 4; ++i) acc += commutator(t.X(i), pi(i, k));
    out.push_back({"sum_X_Pi_k" + std::to_string(k + 1), maxAbsEntry(acc)});
  }

  double xx = 0.0;
  double xpi = 0.0;
  double crossBlocks = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (sameTorusGroup(a, b)) {
        xx = std::max(xx, maxAbsEntry(commutator(t.X(a), t.X(b))));
        for (int c = 0; c < 4; ++c) {
          if (sameTorusGroup(a, c)) xpi = std::max(xpi, maxAbsEntry(commutator(t.X(a), pi(b, c))));
        }
      } else {
        crossBlocks = std::max(crossBlocks, maxAbsEntry(pi(a, b)));
      }
    }
  }
  out.push_back({"same_group_X_commute", xx});
  out.push_back({"same_group_X_Pi_commute", xpi});
  out.push_back({"cross_group_Pi_blocks", crossBlocks});

  for (auto& r : closedTraceResiduals(g, trials, seed)) out.push_back(std::move(r));
  return out;
}

}  // namespace ncgeom
