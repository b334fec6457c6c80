#include "ncgeom/fuzzy_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ncgeom {

namespace {

// kEpsilon[i][j][k], zero-based.
constexpr int kEpsilon[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

Geometry sphereGeometry(int N, double hbar) {
  auto j = spinMatrices(N);
  std::vector<Element> x;
  x.reserve(3);
  for (auto& ji : j) x.push_back(ji * hbar);
  std::vector<Element> d;
  d.reserve(9);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Element block = -(x[a] * x[b]);
      if (a == b) block += Element::identity(N);
      d.push_back(std::move(block));
    }
  }
  return Geometry(std::move(x), hbar, ModuleOperator(3, std::move(d)));
}

}  // namespace

int levi_civita(int i, int j, int k) { return kEpsilon[i][j][k]; }

std::array<Element, 3> spinMatrices(int n) {
  if (n < 1) throw std::invalid_argument("spin representation dimension must be positive");
  const double j = 0.5 * (n - 1);
  Matrix jz = Matrix::Zero(n, n);
  Matrix jp = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const double m = j - a;
    jz(a, a) = m;
    if (a > 0) jp(a - 1, a) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  Matrix jx = 0.5 * (jp + jp.adjoint());
  Matrix jy = (jp - jp.adjoint()) / Complex{0.0, 2.0};
  return {Element(std::move(jx)), Element(std::move(jy)), Element(std::move(jz))};
}

double fuzzySphereHbar(int N) {
  if (N < 2) throw std::invalid_argument("fuzzy sphere needs N >= 2, got " + std::to_string(N));
  return 2.0 / std::sqrt(static_cast<double>(N) * N - 1.0);
}

FuzzySphere buildFuzzySphere(int N) {
  const double hbar = fuzzySphereHbar(N);
  return FuzzySphere{N, hbar, sphereGeometry(N, hbar)};
}

ModuleOperator spherePi(const FuzzySphere& fs) {
  std::vector<Element> blocks;
  blocks.reserve(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) blocks.push_back(fs.X(i) * fs.X(j));
  }
  return ModuleOperator(3, std::move(blocks));
}

ModuleOperator sphereD(const FuzzySphere& fs) {
  return ModuleOperator::identity(3, fs.N) - spherePi(fs);
}

ModuleOperator sphereDFromCommutators(const FuzzySphere& fs) {
  const Complex ihbar2 = (kI * fs.hbar) * (kI * fs.hbar);
  std::vector<Element> blocks;
  blocks.reserve(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Element acc = Element::zero(fs.N);
      for (int k = 0; k < 3; ++k) acc += commutator(fs.X(j), fs.X(k)) * commutator(fs.X(i), fs.X(k));
      blocks.push_back(acc * (1.0 / ihbar2));
    }
  }
  return ModuleOperator(3, std::move(blocks));
}

ResidualReport sphereRelations(const FuzzySphere& fs) {
  double comm = 0.0;
  double herm = 0.0;
  Element casimir = Element::zero(fs.N);
  for (int i = 0; i < 3; ++i) {
    herm = std::max(herm, maxAbsEntry(fs.X(i).adjoint() - fs.X(i)));
    casimir += fs.X(i) * fs.X(i);
    for (int j = 0; j < 3; ++j) {
      Element rhs = Element::zero(fs.N);
      for (int k = 0; k < 3; ++k) rhs += fs.X(k) * static_cast<double>(levi_civita(i, j, k));
      comm = std::max(comm, maxAbsEntry(commutator(fs.X(i), fs.X(j)) - rhs * (kI * fs.hbar)));
    }
  }
  return {
      {"commutation", comm},
      {"unit_sphere", maxAbsEntry(casimir - Element::identity(fs.N))},
      {"hermiticity", herm},
  };
}

ResidualReport epsilonIdentities(const FuzzySphere& fs) {
  const Complex ihbar = kI * fs.hbar;
  double quadratic = 0.0;
  Element cubic = Element::zero(fs.N);
  for (int i = 0; i < 3; ++i) {
    Element acc = Element::zero(fs.N);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita(i, j, k);
        if (e == 0) continue;
        acc += fs.X(j) * fs.X(k) * static_cast<double>(e);
        cubic += fs.X(i) * fs.X(j) * fs.X(k) * static_cast<double>(e);
      }
    }
    quadratic = std::max(quadratic, maxAbsEntry(acc - fs.X(i) * ihbar));
  }

  // eps^{ijk} eps^{imn} = d^{jm} d^{kn} - d^{jn} d^{km} and eps^{ikl} eps^{jkl} = 2 d^{ij}
  int contraction4 = 0;
  int contraction2 = 0;
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
          int lhs = 0;
          for (int i = 0; i < 3; ++i) lhs += levi_civita(i, j, k) * levi_civita(i, m, n);
          const int rhs = delta(j, m) * delta(k, n) - delta(j, n) * delta(k, m);
          contraction4 = std::max(contraction4, std::abs(lhs - rhs));
        }
      }
      int lhs = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) lhs += levi_civita(j, a, b) * levi_civita(k, a, b);
      }
      contraction2 = std::max(contraction2, std::abs(lhs - 2 * delta(j, k)));
    }
  }

  return {
      {"eps_XX", quadratic},
      {"eps_XXX", maxAbsEntry(cubic - Element::identity(fs.N) * ihbar)},
      {"eps_eps_four_index", static_cast<double>(contraction4)},
      {"eps_eps_two_index", static_cast<double>(contraction2)},
  };
}

CurvatureTensor sphereCurvatureClosedForm(const FuzzySphere& fs) {
  const Complex ihbar = kI * fs.hbar;
  const auto& X = fs.geometry.generators();
  auto eps = [](int a, int b, int c) { return static_cast<double>(levi_civita(a, b, c)); };
  std::vector<Element> r;
  r.reserve(81);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          Element acc = Element::zero(fs.N);
          for (int p = 0; p < 3; ++p) {
            for (int q = 0; q < 3; ++q) {
              const double c = eps(i, k, p) * eps(j, l, q) - eps(j, k, p) * eps(i, l, q);
              if (c != 0.0) acc += X[p] * X[q] * c;
            }
          }
          for (int p = 0; p < 3; ++p) {
            acc -= X[k] * X[i] * X[p] * (ihbar * eps(j, l, p));
            acc -= X[p] * X[i] * X[l] * (ihbar * eps(j, k, p));
            acc += X[p] * X[j] * X[l] * (ihbar * eps(i, k, p));
            acc += X[k] * X[j] * X[p] * (ihbar * eps(i, l, p));
            acc += X[k] * X[p] * X[l] * (ihbar * eps(i, j, p));
          }
          r.push_back(std::move(acc));
        }
      }
    }
  }
  return CurvatureTensor(3, std::move(r));
}

Element sphereContractedCurvatureClosedForm(const FuzzySphere& fs, int j, int l) {
  const double h = fs.hbar;
  const double h2 = h * h;
  Element acc = Element::zero(fs.N);
  for (int m = 0; m < 3; ++m) {
    acc += fs.X(m) * ((1.0 - h2 - h2 * h2) * levi_civita(j, l, m));
  }
  acc += fs.X(j) * fs.X(l) * (kI * h * (1.0 - 3.0 * h2));
  if (j == l) acc += Element::identity(fs.N) * (kI * h * h2);
  return acc;
}

Element sphereScalarClosedForm(const FuzzySphere& fs) {
  const double h2 = fs.hbar * fs.hbar;
  return Element::identity(fs.N) * (2.0 - 3.0 * h2 + h2 * h2);
}

ResidualReport normalModuleChecks(const FuzzySphere& fs, int trials, std::uint64_t seed) {
  const Geometry& g = fs.geometry;
  const ModuleOperator pi = spherePi(fs);
  const ModuleVector x(g.generators());

  double generated = 0.0;
  double freeness = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ModuleVector n = pi.apply(randomModuleVector(g, seed + t));
    Element coeff = fs.X(0) * n[0];
    for (int j = 1; j < 3; ++j) coeff += fs.X(j) * n[j];
    generated = std::max(generated, maxAbsEntry(n - x * coeff));

    const Element a = randomElement(fs.N, seed + t);
    Element back = Element::zero(fs.N);
    for (int i = 0; i < 3; ++i) back += fs.X(i) * (fs.X(i) * a);
    freeness = std::max(freeness, maxAbsEntry(a - back));
  }
  return {
      {"pi_fixes_generator", maxAbsEntry(pi.apply(x) - x)},
      {"generator_reconstruction", generated},
      {"freeness_reconstruction", freeness},
  };
}

}  // namespace ncgeom
