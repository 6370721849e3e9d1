#pragma once

#include <random>

#include "vucert/representation.hpp"
#include "vucert/triangularize.hpp"

namespace vucert::fixtures {

inline FieldMatrix int_matrix(const FieldPtr& field, std::size_t n,
                              const std::vector<long>& entries) {
  std::vector<CycloNumber> values;
  values.reserve(entries.size());
  for (long e : entries) values.push_back(CycloNumber::from_rational(field, Rational(e)));
  return FieldMatrix(field, n, n, std::move(values));
}

/// The three upper unitriangular generators of the integral Heisenberg group:
/// x has the (1,2) entry set, y the (2,3) entry, z = [x,y] the corner.
struct HeisenbergRep {
  FieldPtr field = CycloField::get(1);
  FieldMatrix x, y, z;

  HeisenbergRep()
      : x(int_matrix(field, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1})),
        y(int_matrix(field, 3, {1, 0, 0, 0, 1, 1, 0, 0, 1})),
        z(int_matrix(field, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1})) {}
};

/// The dual representation g -> (g^-1)^T of a matrix group fixture.
inline FieldMatrix dual(const FieldMatrix& m) {
  FieldMatrix inv = m.inverse();
  FieldMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, inv.at(j, i));
  return out;
}

inline FieldMatrix direct_sum(const FieldMatrix& a, const FieldMatrix& b) {
  std::size_t n = a.rows() + b.rows();
  FieldMatrix out(a.field(), n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return out;
}

inline FieldMatrix scalar_1x1(const FieldPtr& field, const Rational& value) {
  return FieldMatrix(field, 1, 1, {CycloNumber::from_rational(field, value)});
}

/// Pseudo-random commuting triples that are simultaneously triangularizable
/// over the field: block-diagonal seeds with searchable eigenvalues
/// (rationals and roots of unity) plus polynomials in a shared nilpotent
/// part, conjugated by a random invertible matrix.
struct CommutingTriple {
  FieldMatrix p, p_prime, q;
  std::vector<CycloNumber> eigs_p, eigs_p_prime;
};

inline CycloNumber searchable_value(std::mt19937_64& rng, const FieldPtr& field) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<long> num(1, 5);
      return CycloNumber::from_rational(field, Rational(num(rng)));
    }
    case 1: {
      std::uniform_int_distribution<long> num(-5, -1);
      return CycloNumber::from_rational(field, Rational(num(rng)));
    }
    default: {
      long m = field->conductor().convert_to<long>();
      std::uniform_int_distribution<long> t(0, m - 1);
      return CycloNumber::root_of_unity(field, t(rng));
    }
  }
}

inline CommutingTriple random_commuting_triple(std::mt19937_64& rng, const FieldPtr& field,
                                               std::size_t dimension) {
  std::uniform_int_distribution<std::size_t> block_count(1, std::min<std::size_t>(3, dimension));
  std::size_t blocks = block_count(rng);
  std::vector<std::size_t> sizes(blocks, 1);
  for (std::size_t extra = dimension - blocks; extra > 0; --extra) {
    std::uniform_int_distribution<std::size_t> which(0, blocks - 1);
    sizes[which(rng)] += 1;
  }

  FieldMatrix p(field, dimension, dimension);
  FieldMatrix pp(field, dimension, dimension);
  FieldMatrix q(field, dimension, dimension);
  std::uniform_int_distribution<long> small(-2, 2);
  std::size_t offset = 0;
  std::vector<CycloNumber> vals_p, vals_pp;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t u = sizes[b];
    CycloNumber ep = searchable_value(rng, field);
    CycloNumber epp = searchable_value(rng, field);
    CycloNumber eq = searchable_value(rng, field);
    vals_p.push_back(ep);
    vals_pp.push_back(epp);
    // Shared strictly upper part; each matrix adds its own polynomial in it.
    FieldMatrix nil(field, u, u);
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t j = i + 1; j < u; ++j)
        nil.set(i, j, CycloNumber::from_rational(field, Rational(small(rng))));
    FieldMatrix nil2 = nil * nil;
    auto place = [&](FieldMatrix& target, const CycloNumber& eig, long c1, long c2) {
      for (std::size_t i = 0; i < u; ++i) {
        target.set(offset + i, offset + i, eig);
        for (std::size_t j = 0; j < u; ++j) {
          CycloNumber value = target.at(offset + i, offset + j);
          value = value + Rational(c1) * nil.at(i, j) + Rational(c2) * nil2.at(i, j);
          target.set(offset + i, offset + j, value);
        }
      }
    };
    place(p, ep, small(rng), small(rng));
    place(pp, epp, small(rng), small(rng));
    place(q, eq, small(rng), small(rng));
    offset += u;
  }

  // Conjugate by an invertible matrix with unit determinant structure:
  // identity plus a strictly triangular perturbation, swapped occasionally.
  FieldMatrix c = FieldMatrix::identity(field, dimension);
  for (std::size_t i = 0; i < dimension; ++i)
    for (std::size_t j = 0; j < dimension; ++j)
      if (i < j && small(rng) > 0)
        c.set(i, j, CycloNumber::from_rational(field, Rational(small(rng))));
      else if (i > j && small(rng) < 0)
        c.set(i, j, CycloNumber::from_rational(field, Rational(small(rng))));
  if (!c.is_invertible()) c = FieldMatrix::identity(field, dimension);
  FieldMatrix cinv = c.inverse();

  CommutingTriple triple{c * p * cinv, c * pp * cinv, c * q * cinv, {}, {}};
  // Deduplicate the eigenvalue lists.
  for (const auto& v : vals_p) {
    bool seen = false;
    for (const auto& w : triple.eigs_p) seen = seen || w == v;
    if (!seen) triple.eigs_p.push_back(v);
  }
  for (const auto& v : vals_pp) {
    bool seen = false;
    for (const auto& w : triple.eigs_p_prime) seen = seen || w == v;
    if (!seen) triple.eigs_p_prime.push_back(v);
  }
  return triple;
}

}  // namespace vucert::fixtures
