#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "vucert/triangularize.hpp"

using namespace vucert;
using fixtures::int_matrix;

namespace {

void check_contract(const FieldMatrix& p, const FieldMatrix& pp, const FieldMatrix& q,
                    const TriangularizedTriple& t) {
  const FieldPtr& f = p.field();
  std::size_t n = p.rows();
  FieldMatrix c = t.layout.conjugator;
  FieldMatrix cinv = c.inverse();
  CHECK(c * p * cinv == t.p);
  CHECK(c * pp * cinv == t.p_prime);
  CHECK(c * q * cinv == t.q);
  CHECK(cinv * t.p * c == p);

  std::size_t total = 0;
  std::size_t offset = 0;
  for (std::size_t r = 0; r < t.layout.dims.size(); ++r)
    for (std::size_t s = 0; s < t.layout.dims[r].size(); ++s) {
      std::size_t u = t.layout.dims[r][s];
      total += u;
      for (std::size_t i = 0; i < u; ++i) {
        CHECK(t.p.at(offset + i, offset + i) == t.layout.row_eigenvalues[r]);
        CHECK(t.p_prime.at(offset + i, offset + i) == t.layout.col_eigenvalues[s]);
        for (std::size_t j = 0; j < i; ++j) CHECK(t.p.at(offset + i, offset + j).is_zero());
      }
      offset += u;
    }
  CHECK(total == n);

  // off-block entries vanish for all three conjugated matrices
  offset = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t r = 0; r < t.layout.dims.size(); ++r)
    for (std::size_t s = 0; s < t.layout.dims[r].size(); ++s) {
      if (t.layout.dims[r][s] == 0) continue;
      spans.emplace_back(offset, t.layout.dims[r][s]);
      offset += t.layout.dims[r][s];
    }
  for (const FieldMatrix* m : {&t.p, &t.p_prime, &t.q})
    for (auto [o1, u1] : spans)
      for (auto [o2, u2] : spans) {
        if (o1 == o2) continue;
        for (std::size_t i = 0; i < u1; ++i)
          for (std::size_t j = 0; j < u2; ++j) CHECK(m->at(o1 + i, o2 + j).is_zero());
      }
  (void)f;
}

}  // namespace

TEST_CASE("identity triple") {
  auto f = CycloField::get(1);
  FieldMatrix id = FieldMatrix::identity(f, 3);
  std::vector<CycloNumber> ones = {CycloNumber::one(f)};
  auto t = simultaneous_block_triangularize(id, id, id, ones, ones);
  CHECK(t.layout.dims == std::vector<std::vector<std::size_t>>{{3}});
  CHECK(t.layout.conjugator == id);
}

TEST_CASE("diagonal refinement example") {
  auto f = CycloField::get(1);
  FieldMatrix p = int_matrix(f, 3, {1, 0, 0, 0, 1, 0, 0, 0, 2});
  FieldMatrix pp = int_matrix(f, 3, {3, 0, 0, 0, 4, 0, 0, 0, 4});
  FieldMatrix q = FieldMatrix::identity(f, 3);
  auto rat = [&](long v) { return CycloNumber::from_rational(f, Rational(v)); };
  std::vector<CycloNumber> eig_p = {rat(1), rat(2)};
  std::vector<CycloNumber> eig_pp = {rat(3), rat(4)};
  auto t = simultaneous_block_triangularize(p, pp, q, eig_p, eig_pp);
  CHECK(t.layout.dims == std::vector<std::vector<std::size_t>>{{1, 1}, {0, 1}});
  check_contract(p, pp, q, t);

  // the layout is conjugation-invariant
  FieldMatrix c0 = int_matrix(f, 3, {1, 1, 0, 0, 1, 2, 0, 0, 1});
  FieldMatrix c0inv = c0.inverse();
  auto t2 = simultaneous_block_triangularize(c0 * p * c0inv, c0 * pp * c0inv, c0 * q * c0inv,
                                             eig_p, eig_pp);
  CHECK(t2.layout.dims == t.layout.dims);
}

TEST_CASE("rejects non-commuting and incomplete inputs") {
  auto f = CycloField::get(1);
  FieldMatrix a = int_matrix(f, 2, {1, 1, 0, 1});
  FieldMatrix b = int_matrix(f, 2, {1, 0, 1, 1});
  std::vector<CycloNumber> ones = {CycloNumber::one(f)};
  CHECK_THROWS_AS(simultaneous_block_triangularize(a, b, a, ones, ones), std::invalid_argument);

  // rotation by 90 degrees has no eigenvalues over the rationals
  FieldMatrix rot = int_matrix(f, 2, {0, -1, 1, 0});
  FieldMatrix id = FieldMatrix::identity(f, 2);
  CHECK_THROWS_AS(simultaneous_block_triangularize(rot, id, id, {}, ones), FieldTooSmallError);
}

TEST_CASE("rotation triangularizes over the fourth cyclotomic field") {
  auto f = CycloField::get(4);
  FieldMatrix rot = int_matrix(f, 2, {0, -1, 1, 0});
  FieldMatrix id = FieldMatrix::identity(f, 2);
  std::vector<CycloNumber> eigs = {CycloNumber::root_of_unity(f, 1),
                                   CycloNumber::root_of_unity(f, 3)};
  std::vector<CycloNumber> ones = {CycloNumber::one(f)};
  auto t = simultaneous_block_triangularize(rot, id, id, eigs, ones);
  CHECK(t.layout.dims == std::vector<std::vector<std::size_t>>{{1}, {1}});
  check_contract(rot, id, id, t);
}

TEST_CASE("random commuting triples satisfy the contract") {
  std::mt19937_64 rng(20240229);
  for (long m : {1L, 3L, 4L, 12L}) {
    auto f = CycloField::get(m);
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(2, 5);
      auto triple = fixtures::random_commuting_triple(rng, f, dim(rng));
      auto t = simultaneous_block_triangularize(triple.p, triple.p_prime, triple.q, triple.eigs_p,
                                                triple.eigs_p_prime);
      check_contract(triple.p, triple.p_prime, triple.q, t);
    }
  }
}

TEST_CASE("eigenvalue search finds rationals and roots of unity") {
  auto f = CycloField::get(4);
  FieldMatrix m(f, 2, 2);
  m.set(0, 0, CycloNumber::from_rational(f, Rational(5, 2)));
  m.set(0, 1, CycloNumber::one(f));
  m.set(1, 1, CycloNumber::root_of_unity(f, 1));
  auto found = field_eigenvalue_search(m);
  REQUIRE(found.size() == 2);
  bool has_rational = false, has_root = false;
  for (const auto& ev : found) {
    has_rational = has_rational || ev == CycloNumber::from_rational(f, Rational(5, 2));
    has_root = has_root || ev == CycloNumber::root_of_unity(f, 1);
  }
  CHECK(has_rational);
  CHECK(has_root);

  // degree-one restriction: any field element is found
  FieldMatrix one_by_one(f, 1, 1);
  CycloNumber weird = CycloNumber::one(f) + CycloNumber::root_of_unity(f, 1);
  one_by_one.set(0, 0, weird);
  auto found1 = field_eigenvalue_search(one_by_one);
  REQUIRE(found1.size() == 1);
  CHECK(found1[0] == weird);
}
