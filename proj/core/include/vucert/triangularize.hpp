#pragma once

#include <stdexcept>
#include <vector>

#include "vucert/matrix.hpp"

namespace vucert {

/// Raised when an eigenvalue needed by the triangularization does not lie in
/// the working cyclotomic field: the caller must enlarge the conductor.
struct FieldTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Joint generalized-eigenspace layout of a commuting pair, refined cell by
/// cell: dims[r][s] is the dimension of the (row_eigenvalues[r],
/// col_eigenvalues[s]) cell, and conjugator * M * conjugator^-1 is
/// block-diagonal in lexicographic (r, s) order for each of the three input
/// matrices.
struct BlockLayout {
  std::vector<CycloNumber> row_eigenvalues;
  std::vector<CycloNumber> col_eigenvalues;
  std::vector<std::vector<std::size_t>> dims;
  FieldMatrix conjugator;

  std::size_t cell_offset(std::size_t r, std::size_t s) const;
};

struct TriangularizedTriple {
  BlockLayout layout;
  FieldMatrix p;
  FieldMatrix p_prime;
  FieldMatrix q;
};

/// Simultaneous block triangularization of a commuting triple: splits by the
/// generalized eigenspaces of p, refines each part by p_prime, then upper-
/// triangularizes every commuting block triple by iterated common-eigenvector
/// extraction (ties broken by smallest leading nonzero coordinate).
///
/// eigs_p / eigs_p_prime must be complete lists of distinct eigenvalues in
/// the field (generalized eigenspace dimensions summing to n); otherwise
/// FieldTooSmallError is thrown. Throws std::invalid_argument when the
/// matrices do not pairwise commute.
TriangularizedTriple simultaneous_block_triangularize(const FieldMatrix& p,
                                                      const FieldMatrix& p_prime,
                                                      const FieldMatrix& q,
                                                      const std::vector<CycloNumber>& eigs_p,
                                                      const std::vector<CycloNumber>& eigs_p_prime);

/// Convenience eigenvalue search for fixtures: tries the roots of unity of
/// the field, rational candidates (degree-one factors, small numerators and
/// denominators, and divisor pairs of the norm's constant term when it is
/// small), and returns every verified eigenvalue, deterministically ordered.
/// The list can be incomplete for eigenvalues outside the searched sets;
/// completeness is always re-checked by dimension counts downstream.
std::vector<CycloNumber> field_eigenvalue_search(const FieldMatrix& m);

}  // namespace vucert
