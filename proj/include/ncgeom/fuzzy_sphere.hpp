#pragma once

// The fuzzy sphere in its N-dimensional irreducible representation:
// X^i = hbar J^i with J^i the spin-(N-1)/2 matrices (J^3 diagonal) and hbar
// fixed by the Casimir so that sum_i (X^i)^2 = 1.

#include <array>
#include <cstdint>

#include "ncgeom/algebra.hpp"
#include "ncgeom/module.hpp"
#include "ncgeom/residuals.hpp"

namespace ncgeom {

/// Levi-Civita symbol on zero-based indices, epsilon(0,1,2) = +1.
int levi_civita(int i, int j, int k);

/// Hermitian spin matrices J^1, J^2, J^3 of dimension n, built from the
/// ladder operator J^+ with J^3 = diag(j, j-1, ..., -j).
std::array<Element, 3> spinMatrices(int n);

struct FuzzySphere {
  int N;
  double hbar;
  Geometry geometry;

  const Element& X(int i) const { return geometry.generator(i); }
};

/// hbar = 2 / sqrt(N^2 - 1). Throws std::invalid_argument for N < 2.
double fuzzySphereHbar(int N);
FuzzySphere buildFuzzySphere(int N);

/// Pi^{ij} = X^i X^j
ModuleOperator spherePi(const FuzzySphere& fs);
/// D^{ij} = delta^{ij} - X^i X^j
ModuleOperator sphereD(const FuzzySphere& fs);
/// D^{ij} = [X^j, X^k][X^i, X^k] / (i hbar)^2
ModuleOperator sphereDFromCommutators(const FuzzySphere& fs);

/// commutation relations, unit-sphere relation, hermiticity.
ResidualReport sphereRelations(const FuzzySphere& fs);

/// eps^{ijk} X^j X^k = i hbar X^i, eps^{ijk} X^i X^j X^k = i hbar, and the two
/// integer contractions of the epsilon table.
ResidualReport epsilonIdentities(const FuzzySphere& fs);

/// Six-term closed form of R^{ijkl} for the fuzzy sphere.
CurvatureTensor sphereCurvatureClosedForm(const FuzzySphere& fs);

/// Closed form of sum_{i,k} P^{ik} R^{ijkl}:
/// (1 - hbar^2 - hbar^4) eps^{jlm} X^m + i hbar (1 - 3 hbar^2) X^j X^l + i hbar^3 delta^{jl}.
Element sphereContractedCurvatureClosedForm(const FuzzySphere& fs, int j, int l);

/// (2 - 3 hbar^2 + hbar^4) * 1
Element sphereScalarClosedForm(const FuzzySphere& fs);

/// Normal module generated by X = e_i X^i: Pi-invariance of X, reconstruction
/// N = X (X^j N^j) for random N in the image of Pi, and a = sum_i X^i X^i a.
ResidualReport normalModuleChecks(const FuzzySphere& fs, int trials, std::uint64_t seed);

}  // namespace ncgeom
