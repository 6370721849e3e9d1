#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vucert/poly.hpp"
#include "vucert/rational.hpp"

namespace vucert {

/// The field Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1),
/// with zeta a primitive m-th root of unity. Conductor 1 is the rationals.
/// Instances are immutable and shared; obtain them through get().
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(const Int& conductor);

  const Int& conductor() const { return conductor_; }
  const IntPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return degree_; }

  /// x^e mod Phi_m for 0 <= e < m, as integer coefficient vectors.
  const std::vector<Int>& power_of_zeta(const Int& exponent) const;

  /// Exponents j in [1, m] with gcd(j, m) = 1: the Galois group of
  /// Q(zeta_m)/Q as zeta -> zeta^j.
  const std::vector<Int>& galois_exponents() const { return galois_exponents_; }

 private:
  explicit CycloField(const Int& conductor);

  Int conductor_;
  IntPoly modulus_;
  std::size_t degree_;
  std::vector<std::vector<Int>> zeta_powers_;  // index e in [0, m)
  std::vector<Int> galois_exponents_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_m): phi(m) rational coordinates in the power basis.
/// Values are immutable; all operations are exact and return new values.
class CycloNumber {
 public:
  CycloNumber(FieldPtr field, std::vector<Rational> coeffs);

  static CycloNumber zero(const FieldPtr& field);
  static CycloNumber one(const FieldPtr& field);
  static CycloNumber from_rational(const FieldPtr& field, const Rational& value);
  /// zeta^exponent (any integer exponent, reduced mod the conductor).
  static CycloNumber root_of_unity(const FieldPtr& field, const Int& exponent);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  CycloNumber operator-() const;
  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const Rational& s, const CycloNumber& a);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNumber inverse() const;
  CycloNumber pow(const Int& exponent) const;

  /// The automorphism zeta -> zeta^j; requires gcd(j, conductor) = 1.
  CycloNumber galois_apply(const Int& j) const;

  /// Order as a root of unity (divides lcm(2, m)), or nullopt if the value
  /// is not a root of unity.
  std::optional<Int> root_of_unity_order() const;

  /// Rendered as a polynomial in z, e.g. "1/2*z^2 - z + 3".
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Checks both operands live in the same field (by conductor); throws
/// std::invalid_argument otherwise.
void require_same_field(const CycloNumber& a, const CycloNumber& b);

/// All roots of unity contained in Q(zeta_m): the m-th roots, joined with
/// their negatives when m is odd.
std::vector<CycloNumber> roots_of_unity_in(const FieldPtr& field);

/// Monic polynomial with CycloNumber coefficients (lowest degree first).
struct CycloPoly {
  FieldPtr field;
  std::vector<CycloNumber> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const;
  CycloNumber evaluate(const CycloNumber& x) const;
  std::string to_string(const std::string& var = "x") const;
};

CycloPoly mul(const CycloPoly& a, const CycloPoly& b);

/// Applies the automorphism coefficientwise.
CycloPoly galois_apply(const CycloPoly& p, const Int& j);

/// Product of p over all Galois conjugates; the result has rational
/// coefficients and every root of p among its roots. For monic p, all roots
/// of p are roots of unity iff the norm is a product of cyclotomics.
/// Throws std::invalid_argument when p is not monic.
RatPoly galois_norm(const CycloPoly& p);

}  // namespace vucert
