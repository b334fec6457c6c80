#pragma once

// Dense complex matrices standing in for elements of a finite-dimensional
// *-algebra. Every element carries its representation dimension and binary
// operations refuse to mix dimensions.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncgeom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int lhs, int rhs);
};

class Element {
 public:
  explicit Element(Matrix entries);

  static Element zero(int dim);
  static Element identity(int dim);
  /// Matrix unit E_{row,col} (zero-based indices).
  static Element unit(int dim, int row, int col);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Element adjoint() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, Complex c) { return a *= c; }
  friend Element operator*(Complex c, Element a) { return a *= c; }
  friend Element operator*(Element a, double c) { return a *= Complex{c, 0.0}; }
  friend Element operator*(double c, Element a) { return a *= Complex{c, 0.0}; }

 private:
  Matrix entries_;
};

void requireSameDim(const Element& a, const Element& b);

/// ab - ba
Element commutator(const Element& a, const Element& b);

/// (1/dim) * sum of the diagonal.
Complex normalizedTrace(const Element& a);

/// Entrywise max modulus; the residual norm used by every check.
double maxAbsEntry(const Element& a);

/// Entries have real and imaginary parts uniform on [-1, 1], filled row by
/// row (real part first) from a 64-bit Mersenne Twister seeded with `seed`.
/// Each draw maps the top 53 bits of the generator output to [0, 1) and then
/// affinely to [-1, 1], so the stream is identical on every platform. The
/// hermitian variant returns (a + a^*)/2 of the same draw.
Element randomElement(int dim, std::uint64_t seed, bool hermitian = false);

/// Residual comparison: |a - b|_max <= atol + rtol * max(|a|_max, |b|_max).
struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-10;

  double bound(const Element& a, const Element& b) const;
  bool close(const Element& a, const Element& b) const;
};

}  // namespace ncgeom
