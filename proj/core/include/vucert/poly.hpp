#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vucert/rational.hpp"

namespace vucert {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  /// x^k
  static Poly monomial(std::size_t k, T c = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    std::vector<T> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> v = a.coeffs_;
    for (auto& c : v) c = s * c;
    return Poly(std::move(v));
  }

  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<T> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = T(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);

/// True when every coefficient has denominator 1.
bool has_integer_coefficients(const RatPoly& p);
/// Requires has_integer_coefficients.
IntPoly to_integer(const RatPoly& p);

/// Quotient and remainder over a field of fractions; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Exact quotient of integer polynomials; throws if the division leaves a
/// remainder or a fractional coefficient.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Monic gcd over the rationals (Euclid). gcd(0,0) = 0.
RatPoly monic_gcd(RatPoly a, RatPoly b);

/// p / gcd(p, p'), normalized monic: same roots as p, each once.
RatPoly squarefree_part(const RatPoly& p);

/// The m-th cyclotomic polynomial, monic over the integers, degree phi(m).
/// Computed by exact division of x^m - 1 by the proper-divisor cyclotomics.
IntPoly cyclotomic_poly(const Int& m);

/// If p is exactly a product of cyclotomic polynomials, returns the sorted
/// multiset of their indices; otherwise nullopt. Requires p monic with
/// nonzero constant term (throws std::invalid_argument otherwise).
/// Candidate indices d satisfy phi(d) <= deg p, hence d <= 2 deg^2.
std::optional<std::vector<Int>> is_cyclotomic_product(const IntPoly& p);

/// Independent test that every root of p is a root of unity: with
/// L = lcm{d : phi(d) <= deg p}, true iff the squarefree part of p divides
/// x^L - 1 over the rationals. Same preconditions as is_cyclotomic_product.
bool kronecker_oracle(const IntPoly& p);

/// For monic p over Q with a common denominator D of its coefficients,
/// returns the monic integer polynomial q(x) = D^n p(x/D) together with D.
/// The roots of q are D times the roots of p; D == 1 iff p already had
/// integer coefficients.
std::pair<IntPoly, Int> scale_to_monic_integer(const RatPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");

}  // namespace vucert
