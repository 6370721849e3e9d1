#include <doctest.h>

#include "vucert/poly.hpp"

using namespace vucert;

namespace {

IntPoly ip(std::vector<long> coeffs) {
  std::vector<Int> v(coeffs.begin(), coeffs.end());
  return IntPoly(std::move(v));
}

IntPoly pow_poly(const IntPoly& p, int e) {
  IntPoly acc = IntPoly::constant(Int(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == ip({-1, 1}));
  CHECK(cyclotomic_poly(2) == ip({1, 1}));
  CHECK(cyclotomic_poly(12) == ip({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(5) == ip({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(12).degree() == 4);
}

TEST_CASE("product of cyclotomics over divisors is x^m - 1") {
  for (long m = 1; m <= 30; ++m) {
    IntPoly product = IntPoly::constant(Int(1));
    for (const Int& d : divisors(m)) product = product * cyclotomic_poly(d);
    std::vector<Int> expected(static_cast<std::size_t>(m) + 1, Int(0));
    expected.front() = -1;
    expected.back() = 1;
    CHECK(product == IntPoly(std::move(expected)));
  }
}

TEST_CASE("cyclotomic product peeling") {
  auto unipotent = is_cyclotomic_product(pow_poly(ip({-1, 1}), 3));
  REQUIRE(unipotent.has_value());
  CHECK(*unipotent == std::vector<Int>({1, 1, 1}));

  CHECK(!is_cyclotomic_product(ip({-1, -1, 1})).has_value());  // x^2 - x - 1

  auto fifth = is_cyclotomic_product(ip({1, 1, 1, 1, 1}));
  REQUIRE(fifth.has_value());
  CHECK(*fifth == std::vector<Int>({5}));

  CHECK_THROWS_AS(is_cyclotomic_product(ip({1, 2})), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(is_cyclotomic_product(ip({0, 1})), std::invalid_argument);  // zero constant
}

TEST_CASE("kronecker divisibility oracle") {
  CHECK(kronecker_oracle(ip({-1, 1})));
  CHECK(!kronecker_oracle(ip({-2, 1})));
  CHECK(!kronecker_oracle(ip({-1, -1, 1})));
  CHECK(kronecker_oracle(pow_poly(ip({1, 1, 1}), 2)));  // Phi_3^2: squarefree part divides
}

TEST_CASE("peeling and kronecker agree on a small window") {
  // monic cubics with coefficients in [-2,2], nonzero constant term
  for (long c0 = -2; c0 <= 2; ++c0) {
    if (c0 == 0) continue;
    for (long c1 = -2; c1 <= 2; ++c1)
      for (long c2 = -2; c2 <= 2; ++c2) {
        IntPoly p = ip({c0, c1, c2, 1});
        CHECK(is_cyclotomic_product(p).has_value() == kronecker_oracle(p));
      }
  }
}

TEST_CASE("division and gcd over the rationals") {
  RatPoly a = to_rational(ip({-1, 0, 1}));  // x^2 - 1
  RatPoly b = to_rational(ip({-1, 1}));     // x - 1
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == to_rational(ip({1, 1})));

  CHECK(monic_gcd(a, b) == b);
  CHECK(squarefree_part(to_rational(pow_poly(ip({-1, 1}), 3))) == to_rational(ip({-1, 1})));
  CHECK_THROWS_AS(exact_div(ip({1, 1}), ip({-1, 1})), std::invalid_argument);
}

TEST_CASE("monic integer rescaling") {
  std::vector<Rational> coeffs = {Rational(-1, 2), Rational(1)};  // x - 1/2
  auto [scaled, factor] = scale_to_monic_integer(RatPoly(coeffs));
  CHECK(factor == 2);
  CHECK(scaled == ip({-1, 1}));  // roots doubled

  auto [same, one] = scale_to_monic_integer(to_rational(ip({3, -2, 1})));
  CHECK(one == 1);
  CHECK(same == ip({3, -2, 1}));
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(ip({1, 0, -1, 0, 1})) == "x^4 - x^2 + 1");
  CHECK(to_string(ip({-2})) == "-2");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(to_string(ip({0, 3})) == "3*x");
}
