#pragma once

// Noncommutative torus at rational angle theta = pi k / N, realized by N x N
// clock and shift matrices:
//   U = diag(1, w, ..., w^{N-1}),  w = exp(2 pi i k / N)
//   V_{a, a+1 mod N} = 1
// so that VU = qUV with q = exp(2 i theta), and hbar = tan(theta).
// Zero-based generator indices 0,1 form the unbarred group, 2,3 the barred one.

#include <cstdint>
#include <stdexcept>

#include "ncgeom/algebra.hpp"
#include "ncgeom/module.hpp"
#include "ncgeom/residuals.hpp"

namespace ncgeom {

class TorusParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NCTorus {
  int N;
  int k;
  double theta;
  Complex q;
  double hbar;
  Element U;
  Element V;
  Geometry geometry;

  const Element& X(int i) const { return geometry.generator(i); }
};

/// Requires N >= 3 and 0 < 2k < N; 2k == N is the tan(theta) pole.
void validateTorusParameters(int N, int k);
NCTorus buildNCTorus(int N, int k);

/// True when both indices lie in the same generator group.
inline bool sameTorusGroup(int i, int j) { return (i < 2) == (j < 2); }

/// Pi^{ab} = 2 X^a X^b within a group, 0 across groups.
ModuleOperator torusPi(const NCTorus& t);
ModuleOperator torusD(const NCTorus& t);

/// Defining relations of the hermitian generators, unitarity, VU = qUV and
/// the reconstruction of U, V from the generators.
ResidualReport torusRelations(const NCTorus& t);

/// The four exchange relations X^3X^1 = cos(2 theta) X^1X^3 - i sin(2 theta) X^2X^4
/// etc., plus VU = qUV rebuilt from them.
ResidualReport torusCommutationAuxiliary(const NCTorus& t);

/// All 256 curvature components, the structurally-zero classes individually,
/// the scalar curvature and the scalar q-polynomial identity.
ResidualReport torusFlatnessCheck(const NCTorus& t);

/// E1 = -e1 X^2 + e2 X^1, E2 = -e3 X^4 + e4 X^3.
ModuleVector torusE1(const NCTorus& t);
ModuleVector torusE2(const NCTorus& t);
/// N_pm = e1 X^1 + e2 X^2 pm (e3 X^3 + e4 X^4)
ModuleVector torusNormalPlus(const NCTorus& t);
ModuleVector torusNormalMinus(const NCTorus& t);

ResidualReport torusTangentBasisChecks(const NCTorus& t, int trials, std::uint64_t seed);
ResidualReport torusNormalBasisChecks(const NCTorus& t, int trials, std::uint64_t seed);

/// Random W rebuilt as E1 a + E2 b + N_+ c + N_- d from the explicit
/// coefficient formulas of both bases.
ResidualReport torusFrameReconstruction(const NCTorus& t, int trials, std::uint64_t seed);

/// sum_i [X^i, Pi^{ik}] per k, the structural zeros it rests on, and the
/// closedness defect of the normalized trace on random tangent vectors.
ResidualReport torusClosedTraceCheck(const NCTorus& t, int trials, std::uint64_t seed);

}  // namespace ncgeom
