#pragma once

// Commutative reference geometry: surfaces embedded in R^m with the Poisson
// bracket {f, h} = eps^{ab} d_a f d_b h / sqrt(g), the tangent projector built
// from brackets of the embedding coordinates, and the curvature contraction
// that the noncommutative side reproduces in its commutative limit.

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncgeom::classical {

using Param = std::array<double, 2>;

class SurfaceDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ParamBox {
  Param lo;
  Param hi;
};

class EmbeddedSurface {
 public:
  virtual ~EmbeddedSurface() = default;

  virtual std::string name() const = 0;
  virtual int ambientDim() const = 0;
  /// Sampling box; excludes coordinate degeneracies.
  virtual ParamBox domain() const = 0;
  /// Throws SurfaceDomainError outside the admissible region.
  virtual void checkDomain(const Param& u) const = 0;

  virtual Eigen::VectorXd embedding(const Param& u) const = 0;
  /// m x 2, column a holds d_a x.
  virtual Eigen::MatrixXd jacobian(const Param& u) const = 0;
  /// Element b is d_b of the jacobian.
  virtual std::array<Eigen::MatrixXd, 2> jacobianDerivatives(const Param& u) const = 0;
};

/// x = (sin t cos p, sin t sin p, cos t), u = (t, p), t kept poleGuard away from 0 and pi.
class RoundSphere final : public EmbeddedSurface {
 public:
  explicit RoundSphere(double poleGuard = 1e-3) : guard_(poleGuard) {}

  std::string name() const override { return "sphere"; }
  int ambientDim() const override { return 3; }
  ParamBox domain() const override;
  void checkDomain(const Param& u) const override;
  Eigen::VectorXd embedding(const Param& u) const override;
  Eigen::MatrixXd jacobian(const Param& u) const override;
  std::array<Eigen::MatrixXd, 2> jacobianDerivatives(const Param& u) const override;

 private:
  double guard_;
};

/// x = (cos p1, sin p1, cos p2, sin p2) / sqrt(2)
class CliffordTorus final : public EmbeddedSurface {
 public:
  std::string name() const override { return "clifford-torus"; }
  int ambientDim() const override { return 4; }
  ParamBox domain() const override;
  void checkDomain(const Param& u) const override;
  Eigen::VectorXd embedding(const Param& u) const override;
  Eigen::MatrixXd jacobian(const Param& u) const override;
  std::array<Eigen::MatrixXd, 2> jacobianDerivatives(const Param& u) const override;
};

/// "sphere" or "clifford-torus"; throws std::invalid_argument otherwise.
std::unique_ptr<EmbeddedSurface> makeSurface(const std::string& name);

struct SurfacePoint {
  Param u;
  Eigen::VectorXd x;
  Eigen::MatrixXd jacobian;
  Eigen::Matrix2d g;
  double sqrtg = 0.0;
};

SurfacePoint samplePoint(const EmbeddedSurface& s, const Param& u);

/// {x^i, x^j}
Eigen::MatrixXd poissonBracketCoords(const SurfacePoint& p);

struct ClassicalProjector {
  Eigen::MatrixXd fromBrackets;  ///< D^{ij} = {x^i, x^k}{x^j, x^k}
  Eigen::MatrixXd fromJacobian;  ///< J g^{-1} J^T
  Eigen::MatrixXd normal;        ///< 1 - D
  double agreement = 0.0;        ///< max |fromBrackets - fromJacobian|
};

ClassicalProjector classicalProjector(const SurfacePoint& p);

enum class DerivativeMode { Analytic, FiniteDifference };

struct CurvatureOptions {
  DerivativeMode mode = DerivativeMode::Analytic;
  double fdStep = 1e-5;
};

struct ClassicalCurvature {
  int m = 0;
  std::vector<double> components;  ///< R^{ijkl}, l fastest
  double scalar = 0.0;             ///< sum P^{jl} P^{ik} R^{ijkl}

  double operator()(int i, int j, int k, int l) const {
    return components[((i * m + j) * m + k) * m + l];
  }
};

/// R^{ijkl} = sum_n d^i(D^{kn}) d^j(D^{nl}) - d^j(D^{kn}) d^i(D^{nl}) with
/// d^i = {x^i, .}. Parameter derivatives of D come from the second
/// derivatives of the embedding (Analytic) or central differences of the
/// Jacobian-built projector (FiniteDifference, O(step^2)).
ClassicalCurvature classicalCurvature(const EmbeddedSurface& s, const Param& u,
                                      const CurvatureOptions& opts = {});

/// eps^{ap} eps^{bq} g_{pq} / det(g): the cofactor form of the inverse.
Eigen::Matrix2d inverseViaPoissonBivector(const Eigen::Matrix2d& g);

/// max |g^{-1} - theta^{ap} theta^{bq} g_{pq}| with theta = eps / sqrt(g),
/// divided by max(1, |g^{-1}|_max) since g^{-1} blows up near the sphere's poles.
double metricInverseIdentity(const SurfacePoint& p);

/// Halton (bases 2, 3) points mapped into the surface's domain box.
std::vector<Param> quasiRandomSamples(const EmbeddedSurface& s, int count);
/// count x count cell-centred grid over the domain box.
std::vector<Param> gridSamples(const EmbeddedSurface& s, int count);

// Closed-form reference data.
int levi_civita3(int i, int j, int k);
double sphereCurvatureReference(const Eigen::VectorXd& x, int i, int j, int k, int l);
Eigen::MatrixXd sphereBracketReference(const Eigen::VectorXd& x);
Eigen::MatrixXd sphereProjectorReference(const Eigen::VectorXd& x);
Eigen::MatrixXd torusBracketReference(const Eigen::VectorXd& x);
Eigen::MatrixXd torusProjectorReference(const Eigen::VectorXd& x);

}  // namespace ncgeom::classical
