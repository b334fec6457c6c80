#include "ncgeom/algebra.hpp"

#include <algorithm>
#include <random>

namespace ncgeom {

DimensionMismatch::DimensionMismatch(int lhs, int rhs)
    : std::invalid_argument("incompatible algebra elements: dimension " +
                            std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

Element::Element(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw std::invalid_argument("algebra element must be a non-empty square matrix");
  }
}

Element Element::zero(int dim) { return Element(Matrix::Zero(dim, dim)); }

Element Element::identity(int dim) { return Element(Matrix::Identity(dim, dim)); }

Element Element::unit(int dim, int row, int col) {
  Matrix m = Matrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return Element(std::move(m));
}

Element Element::adjoint() const { return Element(entries_.adjoint()); }

Element& Element::operator+=(const Element& other) {
  requireSameDim(*this, other);
  entries_ += other.entries_;
  return *this;
}

Element& Element::operator-=(const Element& other) {
  requireSameDim(*this, other);
  entries_ -= other.entries_;
  return *this;
}

Element& Element::operator*=(Complex c) {
  entries_ *= c;
  return *this;
}

Element operator-(const Element& a) { return Element(-a.entries_); }

Element operator*(const Element& a, const Element& b) {
  requireSameDim(a, b);
  return Element(a.entries_ * b.entries_);
}

void requireSameDim(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Complex normalizedTrace(const Element& a) {
  return a.matrix().trace() / static_cast<double>(a.dim());
}

double maxAbsEntry(const Element& a) { return a.matrix().cwiseAbs().maxCoeff(); }

namespace {

double uniformSymmetric(std::mt19937_64& gen) {
  const double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

}  // namespace

Element randomElement(int dim, std::uint64_t seed, bool hermitian) {
  if (dim <= 0) throw std::invalid_argument("randomElement: dim must be positive");
  std::mt19937_64 gen(seed);
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = uniformSymmetric(gen);
      const double im = uniformSymmetric(gen);
      m(r, c) = Complex{re, im};
    }
  }
  if (hermitian) {
    Matrix h = 0.5 * (m + m.adjoint());
    return Element(std::move(h));
  }
  return Element(std::move(m));
}

double Tolerance::bound(const Element& a, const Element& b) const {
  return atol + rtol * std::max(maxAbsEntry(a), maxAbsEntry(b));
}

bool Tolerance::close(const Element& a, const Element& b) const {
  return maxAbsEntry(a - b) <= bound(a, b);
}

}  // namespace ncgeom
