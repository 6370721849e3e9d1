#include <doctest.h>

#include <random>

#include "vucert/cyclotomic.hpp"

using namespace vucert;

namespace {

CycloNumber zeta(const FieldPtr& f, long e = 1) { return CycloNumber::root_of_unity(f, e); }

CycloNumber random_element(std::mt19937_64& rng, const FieldPtr& f) {
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  std::vector<Rational> coeffs(f->degree());
  for (auto& c : coeffs) c = Rational(num(rng), den(rng));
  return CycloNumber(f, std::move(coeffs));
}

}  // namespace

TEST_CASE("field construction") {
  auto q = CycloField::get(1);
  CHECK(q->degree() == 1);
  auto q12 = CycloField::get(12);
  CHECK(q12->degree() == 4);
  CHECK(q12->galois_exponents() == std::vector<Int>({1, 5, 7, 11}));
  CHECK_THROWS_AS(CycloField::get(0), std::invalid_argument);
}

TEST_CASE("fourth root of unity squares to -1") {
  auto f = CycloField::get(4);
  CHECK(zeta(f) * zeta(f) == CycloNumber::from_rational(f, Rational(-1)));
  CHECK(zeta(f).galois_apply(3) == -zeta(f));
}

TEST_CASE("inverse of 1 + zeta_3") {
  auto f = CycloField::get(3);
  CycloNumber a = CycloNumber::one(f) + zeta(f);
  CycloNumber inv = a.inverse();
  CHECK(a * inv == CycloNumber::one(f));
  CHECK(inv == -zeta(f));
  CHECK_THROWS_AS(CycloNumber::zero(f).inverse(), std::domain_error);
}

TEST_CASE("mismatched conductors are rejected") {
  auto f3 = CycloField::get(3);
  auto f4 = CycloField::get(4);
  CHECK_THROWS_AS(zeta(f3) + zeta(f4), std::invalid_argument);
  CHECK_THROWS_AS(zeta(f3).galois_apply(3), std::invalid_argument);
}

TEST_CASE("inversion on sampled elements") {
  std::mt19937_64 rng(20240811);
  for (long m : {1L, 3L, 4L, 5L, 8L, 12L}) {
    auto f = CycloField::get(m);
    for (int i = 0; i < 25; ++i) {
      CycloNumber a = random_element(rng, f);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == CycloNumber::one(f));
    }
  }
}

TEST_CASE("galois_apply is a field automorphism on samples") {
  std::mt19937_64 rng(7);
  auto f = CycloField::get(12);
  for (const Int& j : f->galois_exponents()) {
    for (int i = 0; i < 10; ++i) {
      CycloNumber a = random_element(rng, f);
      CycloNumber b = random_element(rng, f);
      CHECK((a + b).galois_apply(j) == a.galois_apply(j) + b.galois_apply(j));
      CHECK((a * b).galois_apply(j) == a.galois_apply(j) * b.galois_apply(j));
    }
  }
}

TEST_CASE("galois norm examples") {
  auto f4 = CycloField::get(4);
  CycloPoly p{f4, {-zeta(f4), CycloNumber::one(f4)}};  // x - zeta_4
  RatPoly norm = galois_norm(p);
  CHECK(norm == to_rational(IntPoly({Int(1), Int(0), Int(1)})));  // x^2 + 1

  auto f3 = CycloField::get(3);
  CycloPoly q{f3, {CycloNumber::from_rational(f3, -1), CycloNumber::one(f3)}};  // x - 1
  CHECK(galois_norm(q) == to_rational(IntPoly({Int(1), Int(-2), Int(1)})));     // (x-1)^2

  CycloPoly r{f3, {CycloNumber::from_rational(f3, -2), CycloNumber::one(f3)}};  // x - 2
  CHECK(galois_norm(r) == to_rational(IntPoly({Int(4), Int(-4), Int(1)})));     // (x-2)^2

  CycloPoly not_monic{f3, {CycloNumber::from_rational(f3, 2)}};
  CHECK_THROWS_AS(galois_norm(not_monic), std::invalid_argument);
}

TEST_CASE("roots of unity and their orders") {
  auto f6 = CycloField::get(6);
  CHECK(*zeta(f6).root_of_unity_order() == 6);
  CHECK(*CycloNumber::from_rational(f6, -1).root_of_unity_order() == 2);
  CHECK(*CycloNumber::one(f6).root_of_unity_order() == 1);
  CHECK(!CycloNumber::from_rational(f6, 2).root_of_unity_order().has_value());

  // odd conductor: -1 is a root of unity even though it is not a power of zeta
  auto f3 = CycloField::get(3);
  CHECK(*CycloNumber::from_rational(f3, -1).root_of_unity_order() == 2);
  CHECK(roots_of_unity_in(f3).size() == 6);
  CHECK(roots_of_unity_in(f6).size() == 6);
}

TEST_CASE("rationality detection in the power basis") {
  auto f12 = CycloField::get(12);
  CHECK(CycloNumber::from_rational(f12, Rational(7, 3)).is_rational());
  CHECK(!zeta(f12).is_rational());
  // zeta_12^3 = zeta_4 = i is not rational; zeta_12^6 = -1 is
  CHECK(!zeta(f12, 3).is_rational());
  CHECK(zeta(f12, 6).is_rational());
  CHECK(zeta(f12, 6).rational_value() == -1);
}
