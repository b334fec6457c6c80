#pragma once

// Free right modules A^m over a matrix algebra, their endomorphisms, and the
// geometry (embedding generators, deformation parameter, tangent projector)
// that the connection and curvature machinery consumes.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncgeom/algebra.hpp"

namespace ncgeom {

class GeometryMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotTangent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAProjector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// U = e_i U^i. Module scalars act on the right: (U a)^i = U^i a.
class ModuleVector {
 public:
  explicit ModuleVector(std::vector<Element> components);
  static ModuleVector zero(int m, int dim);
  /// e_index * a
  static ModuleVector basis(int m, int index, const Element& a);

  int rank() const { return static_cast<int>(components_.size()); }
  int dim() const { return components_.front().dim(); }
  const Element& operator[](int i) const { return components_[i]; }
  const std::vector<Element>& components() const { return components_; }

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);

  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const ModuleVector& u, const Element& a);
  friend ModuleVector operator*(const ModuleVector& u, Complex c);

 private:
  std::vector<Element> components_;
};

/// Max over components of maxAbsEntry.
double maxAbsEntry(const ModuleVector& u);

/// m x m blocks acting by left multiplication: (T U)^i = T^i_j U^j.
class ModuleOperator {
 public:
  ModuleOperator(int m, std::vector<Element> blocks);
  static ModuleOperator identity(int m, int dim);
  static ModuleOperator zero(int m, int dim);

  int rank() const { return m_; }
  int dim() const { return blocks_.front().dim(); }
  const Element& operator()(int i, int j) const { return blocks_[i * m_ + j]; }

  ModuleVector apply(const ModuleVector& u) const;
  ModuleOperator compose(const ModuleOperator& other) const;

  friend ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b);
  friend ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b);

 private:
  int m_;
  std::vector<Element> blocks_;
};

double maxAbsEntry(const ModuleOperator& t);

/// R^{ijkl}, stored flat with l fastest.
class CurvatureTensor {
 public:
  CurvatureTensor(int m, std::vector<Element> components);

  int rank() const { return m_; }
  const Element& operator()(int i, int j, int k, int l) const {
    return components_[((i * m_ + j) * m_ + k) * m_ + l];
  }
  const std::vector<Element>& components() const { return components_; }

 private:
  int m_;
  std::vector<Element> components_;
};

/// Embedding generators X^1..X^m, deformation parameter and the tangent
/// projector D with its complement Pi = 1 - D. Construction validates that
/// the X^i are hermitian and that D is a metric-symmetric projector.
class Geometry {
 public:
  Geometry(std::vector<Element> generators, double hbar, ModuleOperator tangentProjector,
           Tolerance tol = {});

  int rank() const { return static_cast<int>(generators_.size()); }
  int dim() const { return generators_.front().dim(); }
  double hbar() const { return hbar_; }
  const Element& generator(int i) const { return generators_[i]; }
  const std::vector<Element>& generators() const { return generators_; }
  const ModuleOperator& tangentProjector() const { return tangent_; }
  const ModuleOperator& normalProjector() const { return normal_; }
  const Tolerance& tolerance() const { return tol_; }

  /// Throws NotTangent unless |D(U) - U| <= atol + rtol |U|.
  void requireTangent(const ModuleVector& u) const;
  void requireCompatible(const ModuleVector& u) const;

 private:
  std::vector<Element> generators_;
  double hbar_;
  ModuleOperator tangent_;
  ModuleOperator normal_;
  Tolerance tol_;
};

/// <U, V> = sum_i (U^i)^* V^i
Element metric(const ModuleVector& u, const ModuleVector& v);

/// a -> [b, a] / (i hbar)
Element innerDerivation(const Geometry& g, const Element& b, const Element& a);

/// d^i(a) = [X^i, a] / (i hbar), zero-based index.
Element derivation(const Geometry& g, int i, const Element& a);

ModuleVector ambientConnection(const Geometry& g, int i, const ModuleVector& u);
ModuleVector tangentConnection(const Geometry& g, int i, const ModuleVector& u);

/// D(e_k [b, U^k] / (i hbar)); the connection along the inner derivation by b.
ModuleVector innerConnection(const Geometry& g, const Element& b, const ModuleVector& u);

/// Blocks P^{ij} = [X^i, X^j] / (i hbar).
ModuleOperator poissonOperator(const Geometry& g);

/// nabla^i nabla^j U - nabla^j nabla^i U - nabla_{[d^i, d^j]} U, with the
/// commutator of derivations evaluated as the inner derivation by P^{ij}.
ModuleVector curvatureOperator(const Geometry& g, int i, int j, const ModuleVector& u);

/// R^{ijkl} = sum_n d^i(D^{kn}) d^j(D^{nl}) - d^j(D^{kn}) d^i(D^{nl})
CurvatureTensor curvatureTensor(const Geometry& g);

/// e_k sum_l R^{ijkl} U^l
ModuleVector contractCurvature(const CurvatureTensor& r, int i, int j, const ModuleVector& u);

/// S = sum P^{jl} P^{ik} R^{ijkl}, multiplied in exactly that order.
Element scalarCurvature(const Geometry& g, const CurvatureTensor& r);
Element scalarCurvature(const Geometry& g);

/// div(U) = sum_{i,k} D^{ik} d^i(U^k)
Element divergence(const Geometry& g, const ModuleVector& u);

/// normalizedTrace(sum_{i,k} [X^i, Pi^{ik}] U^k). Equals i hbar tr(div U).
Complex closednessDefect(const Geometry& g, const ModuleVector& u);

/// sum_i T^{ii}. Throws NotAProjector when T fails the projector checks.
Element moduleRank(const Geometry& g, const ModuleOperator& t);

struct ProjectorResiduals {
  double idempotence = 0.0;            ///< |T T - T|
  double symmetry = 0.0;               ///< max |(T^{ij})^* - T^{ji}|
  std::optional<double> complement;    ///< |T + partner - 1|
  std::optional<double> orthogonality; ///< max(|T partner|, |partner T|)

  double worst() const;
};

ProjectorResiduals projectorChecks(const Geometry& g, const ModuleOperator& t,
                                   const ModuleOperator* partner = nullptr);

enum class ConnectionKind { Ambient, Tangent };

/// d^i<U,V> - <nabla^i U, V> - <U, nabla^i V>
Element metricCompatibilityDefect(const Geometry& g, int i, const ModuleVector& u,
                                  const ModuleVector& v,
                                  ConnectionKind kind = ConnectionKind::Ambient);

/// Components drawn with randomElement(dim, seed * m + i).
ModuleVector randomModuleVector(const Geometry& g, std::uint64_t seed);
/// D applied to randomModuleVector; tangent by construction.
ModuleVector randomTangentVector(const Geometry& g, std::uint64_t seed);

}  // namespace ncgeom
