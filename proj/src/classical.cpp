#include "ncgeom/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ncgeom::classical {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

MatrixXd projectorFromJacobian(const MatrixXd& j) {
  const Eigen::Matrix2d g = j.transpose() * j;
  return j * g.inverse() * j.transpose();
}

double radicalInverse(int index, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * (index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

Param mapToBox(const ParamBox& box, double s, double t) {
  return {box.lo[0] + s * (box.hi[0] - box.lo[0]), box.lo[1] + t * (box.hi[1] - box.lo[1])};
}

}  // namespace

ParamBox RoundSphere::domain() const {
  return {{guard_, 0.0}, {std::numbers::pi - guard_, 2.0 * std::numbers::pi}};
}

void RoundSphere::checkDomain(const Param& u) const {
  if (!(u[0] > guard_ && u[0] < std::numbers::pi - guard_)) {
    throw SurfaceDomainError("polar angle must stay inside (guard, pi - guard)");
  }
}

VectorXd RoundSphere::embedding(const Param& u) const {
  const double st = std::sin(u[0]), ct = std::cos(u[0]);
  const double sp = std::sin(u[1]), cp = std::cos(u[1]);
  return VectorXd{{st * cp, st * sp, ct}};
}

MatrixXd RoundSphere::jacobian(const Param& u) const {
  const double st = std::sin(u[0]), ct = std::cos(u[0]);
  const double sp = std::sin(u[1]), cp = std::cos(u[1]);
  MatrixXd j(3, 2);
  j << ct * cp, -st * sp,
       ct * sp, st * cp,
       -st, 0.0;
  return j;
}

std::array<MatrixXd, 2> RoundSphere::jacobianDerivatives(const Param& u) const {
  const double st = std::sin(u[0]), ct = std::cos(u[0]);
  const double sp = std::sin(u[1]), cp = std::cos(u[1]);
  MatrixXd dt(3, 2), dp(3, 2);
  dt << -st * cp, -ct * sp,
        -st * sp, ct * cp,
        -ct, 0.0;
  dp << -ct * sp, -st * cp,
        ct * cp, -st * sp,
        0.0, 0.0;
  return {dt, dp};
}

ParamBox CliffordTorus::domain() const {
  return {{0.0, 0.0}, {2.0 * std::numbers::pi, 2.0 * std::numbers::pi}};
}

void CliffordTorus::checkDomain(const Param& u) const {
  if (!std::isfinite(u[0]) || !std::isfinite(u[1])) {
    throw SurfaceDomainError("torus angles must be finite");
  }
}

VectorXd CliffordTorus::embedding(const Param& u) const {
  return kInvSqrt2 * VectorXd{{std::cos(u[0]), std::sin(u[0]), std::cos(u[1]), std::sin(u[1])}};
}

MatrixXd CliffordTorus::jacobian(const Param& u) const {
  MatrixXd j = MatrixXd::Zero(4, 2);
  j(0, 0) = -std::sin(u[0]);
  j(1, 0) = std::cos(u[0]);
  j(2, 1) = -std::sin(u[1]);
  j(3, 1) = std::cos(u[1]);
  return kInvSqrt2 * j;
}

std::array<MatrixXd, 2> CliffordTorus::jacobianDerivatives(const Param& u) const {
  MatrixXd d1 = MatrixXd::Zero(4, 2), d2 = MatrixXd::Zero(4, 2);
  d1(0, 0) = -std::cos(u[0]);
  d1(1, 0) = -std::sin(u[0]);
  d2(2, 1) = -std::cos(u[1]);
  d2(3, 1) = -std::sin(u[1]);
  return {kInvSqrt2 * d1, kInvSqrt2 * d2};
}

std::unique_ptr<EmbeddedSurface> makeSurface(const std::string& name) {
  if (name == "sphere") return std::make_unique<RoundSphere>();
  if (name == "clifford-torus") return std::make_unique<CliffordTorus>();
  throw std::invalid_argument("unknown surface '" + name + "'");
}

SurfacePoint samplePoint(const EmbeddedSurface& s, const Param& u) {
  s.checkDomain(u);
  SurfacePoint p;
  p.u = u;
  p.x = s.embedding(u);
  p.jacobian = s.jacobian(u);
  p.g = p.jacobian.transpose() * p.jacobian;
  const double det = p.g.determinant();
  if (!(det > 0.0)) throw SurfaceDomainError("degenerate induced metric");
  p.sqrtg = std::sqrt(det);
  return p;
}

MatrixXd poissonBracketCoords(const SurfacePoint& p) {
  const MatrixXd& j = p.jacobian;
  return (j.col(0) * j.col(1).transpose() - j.col(1) * j.col(0).transpose()) / p.sqrtg;
}

ClassicalProjector classicalProjector(const SurfacePoint& p) {
  const MatrixXd b = poissonBracketCoords(p);
  ClassicalProjector out;
  out.fromBrackets = b * b.transpose();
  out.fromJacobian = projectorFromJacobian(p.jacobian);
  out.normal = MatrixXd::Identity(p.x.size(), p.x.size()) - out.fromJacobian;
  out.agreement = (out.fromBrackets - out.fromJacobian).cwiseAbs().maxCoeff();
  return out;
}

ClassicalCurvature classicalCurvature(const EmbeddedSurface& s, const Param& u,
                                      const CurvatureOptions& opts) {
  const SurfacePoint p = samplePoint(s, u);
  const int m = s.ambientDim();
  const MatrixXd& j = p.jacobian;

  // dParam[b] = d_b D as an m x m matrix
  std::array<MatrixXd, 2> dParam;
  if (opts.mode == DerivativeMode::Analytic) {
    const Eigen::Matrix2d ginv = p.g.inverse();
    const auto dj = s.jacobianDerivatives(u);
    for (int b = 0; b < 2; ++b) {
      const Eigen::Matrix2d dg = dj[b].transpose() * j + j.transpose() * dj[b];
      dParam[b] = dj[b] * ginv * j.transpose() + j * ginv * dj[b].transpose() -
                  j * ginv * dg * ginv * j.transpose();
    }
  } else {
    const double h = opts.fdStep;
    for (int b = 0; b < 2; ++b) {
      Param plus = u, minus = u;
      plus[b] += h;
      minus[b] -= h;
      dParam[b] = (projectorFromJacobian(s.jacobian(plus)) -
                   projectorFromJacobian(s.jacobian(minus))) / (2.0 * h);
    }
  }

  // d^i(f) = (d_1 x^i d_2 f - d_2 x^i d_1 f) / sqrt(g)
  std::vector<MatrixXd> dD(m);
  for (int i = 0; i < m; ++i) dD[i] = (j(i, 0) * dParam[1] - j(i, 1) * dParam[0]) / p.sqrtg;

  ClassicalCurvature out;
  out.m = m;
  out.components.assign(static_cast<std::size_t>(m) * m * m * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int jj = 0; jj < m; ++jj) {
      const MatrixXd r = dD[i] * dD[jj] - dD[jj] * dD[i];
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) out.components[((i * m + jj) * m + k) * m + l] = r(k, l);
      }
    }
  }

  const MatrixXd pb = poissonBracketCoords(p);
  double sc = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int jj = 0; jj < m; ++jj) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) sc += pb(jj, l) * pb(i, k) * out(i, jj, k, l);
      }
    }
  }
  out.scalar = sc;
  return out;
}

Eigen::Matrix2d inverseViaPoissonBivector(const Eigen::Matrix2d& g) {
  Eigen::Matrix2d theta;
  theta << 0.0, 1.0, -1.0, 0.0;
  theta /= std::sqrt(g.determinant());
  return theta * g * theta.transpose();
}

double metricInverseIdentity(const SurfacePoint& p) {
  const Eigen::Matrix2d inv = p.g.inverse();
  const double scale = std::max(1.0, inv.cwiseAbs().maxCoeff());
  return (inv - inverseViaPoissonBivector(p.g)).cwiseAbs().maxCoeff() / scale;
}

std::vector<Param> quasiRandomSamples(const EmbeddedSurface& s, int count) {
  const ParamBox box = s.domain();
  std::vector<Param> out;
  out.reserve(count);
  for (int n = 1; n <= count; ++n) {
    out.push_back(mapToBox(box, radicalInverse(n, 2), radicalInverse(n, 3)));
  }
  return out;
}

std::vector<Param> gridSamples(const EmbeddedSurface& s, int count) {
  const ParamBox box = s.domain();
  std::vector<Param> out;
  out.reserve(static_cast<std::size_t>(count) * count);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      out.push_back(mapToBox(box, (a + 0.5) / count, (b + 0.5) / count));
    }
  }
  return out;
}

int levi_civita3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0, 1, 2) are cyclic shifts
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

double sphereCurvatureReference(const VectorXd& x, int i, int j, int k, int l) {
  double r = 0.0;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      const int c = levi_civita3(i, k, p) * levi_civita3(j, l, q) -
                    levi_civita3(j, k, p) * levi_civita3(i, l, q);
      r += c * x(p) * x(q);
    }
  }
  return r;
}

MatrixXd sphereBracketReference(const VectorXd& x) {
  MatrixXd b = MatrixXd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) b(i, j) += levi_civita3(i, j, k) * x(k);
    }
  }
  return b;
}

MatrixXd sphereProjectorReference(const VectorXd& x) {
  return MatrixXd::Identity(3, 3) - x * x.transpose();
}

MatrixXd torusBracketReference(const VectorXd& x) {
  MatrixXd b(4, 4);
  b << 0.0, 0.0, x(1) * x(3), -x(1) * x(2),
       0.0, 0.0, -x(0) * x(3), x(0) * x(2),
       -x(1) * x(3), x(0) * x(3), 0.0, 0.0,
       x(1) * x(2), -x(0) * x(2), 0.0, 0.0;
  return 2.0 * b;
}

MatrixXd torusProjectorReference(const VectorXd& x) {
  MatrixXd d(4, 4);
  d << x(1) * x(1), -x(0) * x(1), 0.0, 0.0,
       -x(0) * x(1), x(0) * x(0), 0.0, 0.0,
       0.0, 0.0, x(3) * x(3), -x(2) * x(3),
       0.0, 0.0, -x(2) * x(3), x(2) * x(2);
  return 2.0 * d;
}

}  // namespace ncgeom::classical
