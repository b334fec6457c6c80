#include "ncgeom/module.hpp"

#include <algorithm>
#include <string>

namespace ncgeom {

namespace {

void requireSameShape(const ModuleVector& u, const ModuleVector& v) {
  if (u.rank() != v.rank() || u.dim() != v.dim()) {
    throw GeometryMismatch("module vectors belong to different free modules");
  }
}

// D(e_k d^i(U^k)) without the tangency precondition; callers guarantee it.
ModuleVector projectedDerivative(const Geometry& g, const Element& b, const ModuleVector& u) {
  std::vector<Element> out;
  out.reserve(u.rank());
  for (const auto& c : u.components()) out.push_back(innerDerivation(g, b, c));
  return g.tangentProjector().apply(ModuleVector(std::move(out)));
}

}  // namespace

ModuleVector::ModuleVector(std::vector<Element> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("module vector needs at least one component");
  for (const auto& c : components_) requireSameDim(c, components_.front());
}

ModuleVector ModuleVector::zero(int m, int dim) {
  return ModuleVector(std::vector<Element>(m, Element::zero(dim)));
}

ModuleVector ModuleVector::basis(int m, int index, const Element& a) {
  std::vector<Element> c(m, Element::zero(a.dim()));
  c.at(index) = a;
  return ModuleVector(std::move(c));
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  requireSameShape(*this, other);
  for (int i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  requireSameShape(*this, other);
  for (int i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

ModuleVector operator*(const ModuleVector& u, const Element& a) {
  std::vector<Element> c;
  c.reserve(u.rank());
  for (const auto& x : u.components_) c.push_back(x * a);
  return ModuleVector(std::move(c));
}

ModuleVector operator*(const ModuleVector& u, Complex s) {
  std::vector<Element> c;
  c.reserve(u.rank());
  for (const auto& x : u.components_) c.push_back(x * s);
  return ModuleVector(std::move(c));
}

double maxAbsEntry(const ModuleVector& u) {
  double worst = 0.0;
  for (const auto& c : u.components()) worst = std::max(worst, maxAbsEntry(c));
  return worst;
}

ModuleOperator::ModuleOperator(int m, std::vector<Element> blocks)
    : m_(m), blocks_(std::move(blocks)) {
  if (m_ <= 0 || static_cast<int>(blocks_.size()) != m_ * m_) {
    throw std::invalid_argument("module operator needs exactly m*m blocks");
  }
  for (const auto& b : blocks_) requireSameDim(b, blocks_.front());
}

ModuleOperator ModuleOperator::identity(int m, int dim) {
  std::vector<Element> blocks;
  blocks.reserve(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      blocks.push_back(i == j ? Element::identity(dim) : Element::zero(dim));
    }
  }
  return ModuleOperator(m, std::move(blocks));
}

ModuleOperator ModuleOperator::zero(int m, int dim) {
  return ModuleOperator(m, std::vector<Element>(m * m, Element::zero(dim)));
}

ModuleVector ModuleOperator::apply(const ModuleVector& u) const {
  if (u.rank() != m_) throw GeometryMismatch("operator and vector ranks differ");
  std::vector<Element> out;
  out.reserve(m_);
  for (int i = 0; i < m_; ++i) {
    Element acc = (*this)(i, 0) * u[0];
    for (int j = 1; j < m_; ++j) acc += (*this)(i, j) * u[j];
    out.push_back(std::move(acc));
  }
  return ModuleVector(std::move(out));
}

ModuleOperator ModuleOperator::compose(const ModuleOperator& other) const {
  if (other.m_ != m_) throw GeometryMismatch("operator ranks differ");
  std::vector<Element> out;
  out.reserve(m_ * m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      Element acc = (*this)(i, 0) * other(0, j);
      for (int k = 1; k < m_; ++k) acc += (*this)(i, k) * other(k, j);
      out.push_back(std::move(acc));
    }
  }
  return ModuleOperator(m_, std::move(out));
}

ModuleOperator operator+(const ModuleOperator& a, const ModuleOperator& b) {
  if (a.m_ != b.m_) throw GeometryMismatch("operator ranks differ");
  std::vector<Element> out;
  out.reserve(a.blocks_.size());
  for (std::size_t n = 0; n < a.blocks_.size(); ++n) out.push_back(a.blocks_[n] + b.blocks_[n]);
  return ModuleOperator(a.m_, std::move(out));
}

ModuleOperator operator-(const ModuleOperator& a, const ModuleOperator& b) {
  if (a.m_ != b.m_) throw GeometryMismatch("operator ranks differ");
  std::vector<Element> out;
  out.reserve(a.blocks_.size());
  for (std::size_t n = 0; n < a.blocks_.size(); ++n) out.push_back(a.blocks_[n] - b.blocks_[n]);
  return ModuleOperator(a.m_, std::move(out));
}

double maxAbsEntry(const ModuleOperator& t) {
  double worst = 0.0;
  for (int i = 0; i < t.rank(); ++i) {
    for (int j = 0; j < t.rank(); ++j) worst = std::max(worst, maxAbsEntry(t(i, j)));
  }
  return worst;
}

CurvatureTensor::CurvatureTensor(int m, std::vector<Element> components)
    : m_(m), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != m_ * m_ * m_ * m_) {
    throw std::invalid_argument("curvature tensor needs m^4 components");
  }
}

Geometry::Geometry(std::vector<Element> generators, double hbar, ModuleOperator tangentProjector,
                   Tolerance tol)
    : generators_(std::move(generators)),
      hbar_(hbar),
      tangent_(std::move(tangentProjector)),
      normal_(ModuleOperator::identity(tangent_.rank(), tangent_.dim()) - tangent_),
      tol_(tol) {
  if (generators_.empty()) throw std::invalid_argument("geometry needs at least one generator");
  if (hbar_ == 0.0) throw std::invalid_argument("deformation parameter must be nonzero");
  if (static_cast<int>(generators_.size()) != tangent_.rank()) {
    throw GeometryMismatch("projector rank differs from the number of generators");
  }
  for (const auto& x : generators_) {
    requireSameDim(x, tangent_(0, 0));
    if (!tol_.close(x.adjoint(), x)) throw std::invalid_argument("generator is not hermitian");
  }
  const ProjectorResiduals r = projectorChecks(*this, tangent_);
  const double bound = tol_.atol + tol_.rtol * std::max(1.0, maxAbsEntry(tangent_));
  if (r.idempotence > bound || r.symmetry > bound) {
    throw NotAProjector("tangent projector is not a symmetric idempotent");
  }
}

void Geometry::requireCompatible(const ModuleVector& u) const {
  if (u.rank() != rank() || u.dim() != dim()) {
    throw GeometryMismatch("module vector does not belong to this geometry");
  }
}

void Geometry::requireTangent(const ModuleVector& u) const {
  requireCompatible(u);
  const double defect = maxAbsEntry(tangent_.apply(u) - u);
  if (defect > tol_.atol + tol_.rtol * maxAbsEntry(u)) {
    throw NotTangent("module vector is not in the image of the tangent projector (defect " +
                     std::to_string(defect) + ")");
  }
}

Element metric(const ModuleVector& u, const ModuleVector& v) {
  requireSameShape(u, v);
  Element acc = u[0].adjoint() * v[0];
  for (int i = 1; i < u.rank(); ++i) acc += u[i].adjoint() * v[i];
  return acc;
}

Element innerDerivation(const Geometry& g, const Element& b, const Element& a) {
  return commutator(b, a) * (1.0 / (kI * g.hbar()));
}

Element derivation(const Geometry& g, int i, const Element& a) {
  return innerDerivation(g, g.generator(i), a);
}

ModuleVector ambientConnection(const Geometry& g, int i, const ModuleVector& u) {
  g.requireCompatible(u);
  std::vector<Element> out;
  out.reserve(u.rank());
  for (const auto& c : u.components()) out.push_back(derivation(g, i, c));
  return ModuleVector(std::move(out));
}

ModuleVector tangentConnection(const Geometry& g, int i, const ModuleVector& u) {
  g.requireTangent(u);
  return projectedDerivative(g, g.generator(i), u);
}

ModuleVector innerConnection(const Geometry& g, const Element& b, const ModuleVector& u) {
  g.requireCompatible(u);
  return projectedDerivative(g, b, u);
}

ModuleOperator poissonOperator(const Geometry& g) {
  const int m = g.rank();
  std::vector<Element> blocks;
  blocks.reserve(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) blocks.push_back(derivation(g, i, g.generator(j)));
  }
  return ModuleOperator(m, std::move(blocks));
}

ModuleVector curvatureOperator(const Geometry& g, int i, int j, const ModuleVector& u) {
  g.requireTangent(u);
  const Element& xi = g.generator(i);
  const Element& xj = g.generator(j);
  const Element pij = derivation(g, i, xj);
  // nabla^j U is tangent by construction, so the second application skips the check
  return projectedDerivative(g, xi, projectedDerivative(g, xj, u)) -
         projectedDerivative(g, xj, projectedDerivative(g, xi, u)) -
         projectedDerivative(g, pij, u);
}

CurvatureTensor curvatureTensor(const Geometry& g) {
  const int m = g.rank();
  const ModuleOperator& d = g.tangentProjector();
  // dD[(i * m + k) * m + n] = d^i(D^{kn})
  std::vector<Element> dD;
  dD.reserve(m * m * m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      for (int n = 0; n < m; ++n) dD.push_back(derivation(g, i, d(k, n)));
    }
  }
  auto at = [&](int i, int k, int n) -> const Element& { return dD[(i * m + k) * m + n]; };

  std::vector<Element> r;
  r.reserve(m * m * m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
          Element acc = Element::zero(g.dim());
          for (int n = 0; n < m; ++n) {
            acc += at(i, k, n) * at(j, n, l);
            acc -= at(j, k, n) * at(i, n, l);
          }
          r.push_back(std::move(acc));
        }
      }
    }
  }
  return CurvatureTensor(m, std::move(r));
}

ModuleVector contractCurvature(const CurvatureTensor& r, int i, int j, const ModuleVector& u) {
  const int m = r.rank();
  if (u.rank() != m) throw GeometryMismatch("curvature tensor and vector ranks differ");
  std::vector<Element> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) {
    Element acc = r(i, j, k, 0) * u[0];
    for (int l = 1; l < m; ++l) acc += r(i, j, k, l) * u[l];
    out.push_back(std::move(acc));
  }
  return ModuleVector(std::move(out));
}

Element scalarCurvature(const Geometry& g, const CurvatureTensor& r) {
  const int m = g.rank();
  const ModuleOperator p = poissonOperator(g);
  Element s = Element::zero(g.dim());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) s += p(j, l) * p(i, k) * r(i, j, k, l);
      }
    }
  }
  return s;
}

Element scalarCurvature(const Geometry& g) { return scalarCurvature(g, curvatureTensor(g)); }

Element divergence(const Geometry& g, const ModuleVector& u) {
  g.requireTangent(u);
  const int m = g.rank();
  Element acc = Element::zero(g.dim());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) acc += g.tangentProjector()(i, k) * derivation(g, i, u[k]);
  }
  return acc;
}

Complex closednessDefect(const Geometry& g, const ModuleVector& u) {
  g.requireTangent(u);
  const int m = g.rank();
  Element acc = Element::zero(g.dim());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      acc += commutator(g.generator(i), g.normalProjector()(i, k)) * u[k];
    }
  }
  return normalizedTrace(acc);
}

double ProjectorResiduals::worst() const {
  double w = std::max(idempotence, symmetry);
  if (complement) w = std::max(w, *complement);
  if (orthogonality) w = std::max(w, *orthogonality);
  return w;
}

ProjectorResiduals projectorChecks(const Geometry& g, const ModuleOperator& t,
                                   const ModuleOperator* partner) {
  if (t.rank() != g.rank() || t.dim() != g.dim()) {
    throw GeometryMismatch("operator does not act on this geometry's module");
  }
  ProjectorResiduals r;
  r.idempotence = maxAbsEntry(t.compose(t) - t);
  const int m = t.rank();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      r.symmetry = std::max(r.symmetry, maxAbsEntry(t(i, j).adjoint() - t(j, i)));
    }
  }
  if (partner != nullptr) {
    r.complement = maxAbsEntry(t + *partner - ModuleOperator::identity(m, t.dim()));
    r.orthogonality = std::max(maxAbsEntry(t.compose(*partner)), maxAbsEntry(partner->compose(t)));
  }
  return r;
}

Element moduleRank(const Geometry& g, const ModuleOperator& t) {
  const ProjectorResiduals r = projectorChecks(g, t);
  const Tolerance& tol = g.tolerance();
  const double bound = tol.atol + tol.rtol * std::max(1.0, maxAbsEntry(t));
  if (r.idempotence > bound) throw NotAProjector("operator is not idempotent");
  Element acc = t(0, 0);
  for (int i = 1; i < t.rank(); ++i) acc += t(i, i);
  return acc;
}

Element metricCompatibilityDefect(const Geometry& g, int i, const ModuleVector& u,
                                  const ModuleVector& v, ConnectionKind kind) {
  if (kind == ConnectionKind::Tangent) {
    return derivation(g, i, metric(u, v)) - metric(tangentConnection(g, i, u), v) -
           metric(u, tangentConnection(g, i, v));
  }
  return derivation(g, i, metric(u, v)) - metric(ambientConnection(g, i, u), v) -
         metric(u, ambientConnection(g, i, v));
}

ModuleVector randomModuleVector(const Geometry& g, std::uint64_t seed) {
  const int m = g.rank();
  std::vector<Element> c;
  c.reserve(m);
  for (int i = 0; i < m; ++i) {
    c.push_back(randomElement(g.dim(), seed * static_cast<std::uint64_t>(m) + i));
  }
  return ModuleVector(std::move(c));
}

ModuleVector randomTangentVector(const Geometry& g, std::uint64_t seed) {
  return g.tangentProjector().apply(randomModuleVector(g, seed));
}

}  // namespace ncgeom
