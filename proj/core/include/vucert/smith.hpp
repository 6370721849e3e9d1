#pragma once

#include <memory>
#include <vector>

#include "vucert/matrix.hpp"

namespace vucert {

/// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... and
/// every d_i >= 0.
struct SmithResult {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form, nonzero entries first.
std::vector<Int> smith_invariants(const IntMatrix& m);

/// Echelonized rational row space of an integer matrix, for membership
/// queries. Elimination is fraction-free with gcd-normalized rows; small
/// inputs run on 128-bit arithmetic and fall back to big integers on
/// overflow.
class RowSpace {
 public:
  explicit RowSpace(const IntMatrix& m);
  ~RowSpace();
  RowSpace(RowSpace&&) noexcept;
  RowSpace& operator=(RowSpace&&) noexcept;

  std::size_t rank() const;
  /// True iff vec lies in the rational span of the rows.
  bool contains(const std::vector<Int>& vec) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// True iff every integer solution of M a = 0 has a_i = 0 for all i in
/// targets (0-based column indices). Decided by rational row-space
/// membership of the standard basis vectors; the verdict transfers to any
/// torsion-free abelian group of values.
bool forces_zero(const IntMatrix& m, const std::vector<std::size_t>& targets);

/// Basis of the rational kernel (right null space) of an integer matrix.
std::vector<std::vector<Rational>> rational_kernel_basis(const IntMatrix& m);

}  // namespace vucert
