#pragma once

#include <cstddef>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

// Exact linear algebra over the rationals. Elimination is fraction-free
// (Bareiss) on an integer-scaled copy of the input; pivots are the first
// nonzero entry in each column.

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}. Each vector is primitive integer and has +1 scale
/// on its defining free column. Empty iff the kernel is trivial.
std::vector<Vector> null_space_basis(const Matrix& m);

/// Determinant of a square matrix; the 0x0 matrix has determinant 1.
Rational det(const Matrix& m);

struct LinearSolution {
  bool consistent = false;
  /// Free variables set to zero. Valid iff consistent.
  Vector particular;
  std::vector<Vector> null_basis;
  /// When inconsistent: y with yᵀM = 0 and yᵀb ≠ 0.
  Vector certificate;
};

/// Solves m x = b. Throws DimensionMismatch when b has the wrong length.
LinearSolution solve_linear(const Matrix& m, const Vector& b);

/// Throws SingularPivot when m is singular.
Matrix inverse(const Matrix& m);

struct PPTResult {
  IndexSet pivot_set;
  Matrix transformed;
  /// Sign of det A_αα (+1 for the empty pivot set). Never 0.
  int pivot_det_sign = 1;
};

/// Principal pivot transform on α, laid out in the original index order.
/// Throws SingularPivot when A_αα is singular.
PPTResult ppt(const Matrix& a, const IndexSet& alpha);

/// A_ᾱᾱ − A_ᾱα (A_αα)⁻¹ A_αᾱ. Throws SingularPivot when A_αα is singular.
Matrix schur_complement(const Matrix& a, const IndexSet& alpha);

/// Sign of every principal minor, indexed by subset mask. Entry 0 is the
/// empty minor (+1).
std::vector<int> principal_minor_signs(const Matrix& a);

}  // namespace compmat
