#pragma once

#include <vector>

#include "vucert/cyclotomic.hpp"

namespace vucert {

using FieldVector = std::vector<CycloNumber>;

/// Dense matrix over Q(zeta_m), row-major, exact arithmetic throughout.
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<CycloNumber> entries);

  static FieldMatrix identity(const FieldPtr& field, std::size_t n);
  static FieldMatrix from_columns(const FieldPtr& field, const std::vector<FieldVector>& columns);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const CycloNumber& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, CycloNumber value);

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator*(const CycloNumber& s, const FieldMatrix& a);

  FieldVector apply(const FieldVector& v) const;
  FieldMatrix pow(const Int& exponent) const;

  /// Exact inverse by Gauss-Jordan; throws std::domain_error when singular.
  FieldMatrix inverse() const;
  bool is_invertible() const;
  bool commutes_with(const FieldMatrix& other) const;

  FieldMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<CycloNumber> entries_;
};

/// Monic characteristic polynomial det(xI - M), by the exact Leverrier
/// recurrence (integer divisions only, exact in characteristic zero).
CycloPoly char_poly(const FieldMatrix& m);

/// Row-reduced echelon form; returns pivot column indices. Deterministic:
/// pivots are the first nonzero entries scanning top to bottom.
std::vector<std::size_t> rref_in_place(std::vector<FieldVector>& rows);

std::size_t rank(const FieldMatrix& m);

/// Basis of the right kernel in the standard free-column form. Deterministic.
std::vector<FieldVector> kernel_basis(const FieldMatrix& m);

/// Basis of ker((M - lambda I)^n); empty iff lambda is not an eigenvalue.
/// The dimension equals the algebraic multiplicity when lambda lies in the
/// field.
std::vector<FieldVector> generalized_eigenspace(const FieldMatrix& m, const CycloNumber& lambda);

/// Matrix of M restricted to the invariant subspace spanned by basis
/// (columns); throws std::invalid_argument if the span is not M-invariant
/// or the basis is dependent.
FieldMatrix restrict_to_subspace(const FieldMatrix& m, const std::vector<FieldVector>& basis);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  IntMatrix transpose() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

}  // namespace vucert
