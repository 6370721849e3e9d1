#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "vucert/matrix.hpp"

using namespace vucert;
using fixtures::int_matrix;

namespace {

CycloPoly from_int_poly(const FieldPtr& f, const IntPoly& p) {
  std::vector<CycloNumber> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(CycloNumber::from_rational(f, Rational(c)));
  return CycloPoly{f, std::move(coeffs)};
}

FieldMatrix evaluate_at_matrix(const CycloPoly& p, const FieldMatrix& m) {
  FieldMatrix acc(m.field(), m.rows(), m.cols());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc.set(i, i, acc.at(i, i) + *it);
  }
  return acc;
}

FieldMatrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t n) {
  std::uniform_int_distribution<long> entry(-3, 3);
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, CycloNumber::from_rational(f, Rational(entry(rng))));
  return m;
}

}  // namespace

TEST_CASE("characteristic polynomial basics") {
  auto f = CycloField::get(1);
  FieldMatrix id3 = FieldMatrix::identity(f, 3);
  IntPoly x_minus_1_cubed = IntPoly({Int(-1), Int(1)}) * IntPoly({Int(-1), Int(1)}) *
                            IntPoly({Int(-1), Int(1)});
  CHECK(char_poly(id3).to_string() == from_int_poly(f, x_minus_1_cubed).to_string());

  // companion matrix of x^2 - x - 1
  FieldMatrix companion = int_matrix(f, 2, {0, 1, 1, 1});
  CycloPoly cp = char_poly(companion);
  CHECK(cp.to_string() == from_int_poly(f, IntPoly({Int(-1), Int(-1), Int(1)})).to_string());

  // the unitriangular generator with one superdiagonal 1
  FieldMatrix x = int_matrix(f, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
  CHECK(char_poly(x).to_string() == from_int_poly(f, x_minus_1_cubed).to_string());
}

TEST_CASE("Cayley-Hamilton smoke test over several fields") {
  std::mt19937_64 rng(99);
  for (long m : {1L, 3L, 4L}) {
    auto f = CycloField::get(m);
    for (std::size_t n = 1; n <= 5; n += 2) {
      FieldMatrix a = random_matrix(rng, f, n);
      FieldMatrix value = evaluate_at_matrix(char_poly(a), a);
      CHECK(value == FieldMatrix(f, n, n));
    }
  }
}

TEST_CASE("generalized eigenspaces") {
  auto f = CycloField::get(1);
  CycloNumber one = CycloNumber::one(f);
  CycloNumber two = CycloNumber::from_rational(f, 2);

  CHECK(generalized_eigenspace(FieldMatrix::identity(f, 2), one).size() == 2);

  FieldMatrix diag12 = int_matrix(f, 2, {1, 0, 0, 2});
  auto basis = generalized_eigenspace(diag12, two);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0].is_zero());
  CHECK(basis[0][1] == one);

  FieldMatrix jordan = int_matrix(f, 2, {1, 1, 0, 1});
  CHECK(generalized_eigenspace(jordan, one).size() == 2);
  CHECK(generalized_eigenspace(jordan, two).empty());
}

TEST_CASE("inverse and rank") {
  auto f = CycloField::get(4);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    FieldMatrix m = random_matrix(rng, f, 4);
    if (!m.is_invertible()) continue;
    CHECK(m * m.inverse() == FieldMatrix::identity(f, 4));
  }
  FieldMatrix singular = int_matrix(CycloField::get(1), 2, {1, 2, 2, 4});
  CHECK(!singular.is_invertible());
  CHECK(rank(singular) == 1);
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("restriction to an invariant subspace") {
  auto f = CycloField::get(1);
  FieldMatrix m = int_matrix(f, 3, {2, 1, 0, 0, 2, 0, 0, 0, 5});
  // span(e1, e2) is invariant
  std::vector<FieldVector> basis = {
      {CycloNumber::one(f), CycloNumber::zero(f), CycloNumber::zero(f)},
      {CycloNumber::zero(f), CycloNumber::one(f), CycloNumber::zero(f)}};
  FieldMatrix restricted = restrict_to_subspace(m, basis);
  CHECK(restricted == int_matrix(f, 2, {2, 1, 0, 2}));

  // span(e1 + e3) is not invariant
  std::vector<FieldVector> bad = {
      {CycloNumber::one(f), CycloNumber::zero(f), CycloNumber::one(f)}};
  CHECK_THROWS_AS(restrict_to_subspace(int_matrix(f, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}), bad),
                  std::invalid_argument);
}

TEST_CASE("integer matrix determinant") {
  CHECK(determinant(IntMatrix(3, 3, {Int(2), Int(0), Int(0), Int(0), Int(3), Int(0), Int(0),
                                     Int(0), Int(5)})) == 30);
  CHECK(determinant(IntMatrix(2, 2, {Int(1), Int(2), Int(2), Int(4)})) == 0);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(IntMatrix(2, 2, {Int(0), Int(1), Int(1), Int(0)})) == -1);
}
