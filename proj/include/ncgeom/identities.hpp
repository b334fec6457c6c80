#pragma once

// Residual measurements of the general connection/curvature identities on an
// arbitrary Geometry, driven by seeded random inputs. Every routine returns
// the worst residual over its trials; thresholds belong to the caller.

#include <cstdint>

#include "ncgeom/module.hpp"
#include "ncgeom/residuals.hpp"

namespace ncgeom {

/// Curvature operator vs. e_k R^{ijk}_l U^l over all (i, j) and random tangent U.
double curvatureOperatorAgreement(const Geometry& g, const CurvatureTensor& r, int trials,
                                  std::uint64_t seed);

/// e_k D^{kl} d^i(D^{lm}) d^j(U^m) = e_k d^i(D^{kl}) d^j(D^{lm}) U^m for tangent U.
double leibnizCancellation(const Geometry& g, int trials, std::uint64_t seed);

/// [d^i, d^j](a) against the inner derivation by P^{ij}.
double derivationJacobi(const Geometry& g, int trials, std::uint64_t seed);

/// d^i(a)^* - d^i(a^*)
double starDerivation(const Geometry& g, int trials, std::uint64_t seed);

/// Additivity, real homogeneity in the derivation, additivity in the
/// derivation, and the Leibniz rule, for the ambient or the tangent connection.
ResidualReport affineConnectionAxioms(const Geometry& g, ConnectionKind kind, int trials,
                                      std::uint64_t seed);

/// Worst metric-compatibility defect over all i and random pairs (tangent
/// pairs for the tangent connection).
double metricCompatibility(const Geometry& g, ConnectionKind kind, int trials, std::uint64_t seed);

/// "closedness_defect": max of |closednessDefect| and |tr div U|;
/// "defect_equivalence": max |closednessDefect - i hbar tr div U|.
ResidualReport closedTraceResiduals(const Geometry& g, int trials, std::uint64_t seed);

/// R^{ijkl} + R^{jikl}
double curvatureAntisymmetry(const CurvatureTensor& r);

/// Componentwise max |a - b| over two tensors of equal rank.
double tensorDistance(const CurvatureTensor& a, const CurvatureTensor& b);

}  // namespace ncgeom
