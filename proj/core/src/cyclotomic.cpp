#include "vucert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace vucert {

CycloField::CycloField(const Int& conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("CycloField: conductor must be positive");
  modulus_ = cyclotomic_poly(conductor);
  degree_ = static_cast<std::size_t>(modulus_.degree());
  // x^e mod Phi_m for e in [0, m). Coefficients stay integral because the
  // modulus is monic over the integers.
  std::size_t m = static_cast<std::size_t>(conductor);
  zeta_powers_.reserve(m);
  std::vector<Int> current(degree_, Int(0));
  current[0] = 1;
  for (std::size_t e = 0; e < m; ++e) {
    zeta_powers_.push_back(current);
    // multiply by x, reduce by the modulus
    std::vector<Int> next(degree_, Int(0));
    Int top = current[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) next[i] = current[i - 1];
    next[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < degree_; ++i) next[i] -= top * modulus_.coeff(i);
    }
    current = std::move(next);
  }
  for (Int j = 1; j <= conductor; ++j)
    if (gcd(j, conductor) == 1) galois_exponents_.push_back(j);
}

std::shared_ptr<const CycloField> CycloField::get(const Int& conductor) {
  static std::map<Int, std::shared_ptr<const CycloField>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const CycloField>(new CycloField(conductor));
  cache.emplace(conductor, field);
  return field;
}

const std::vector<Int>& CycloField::power_of_zeta(const Int& exponent) const {
  Int e = exponent % conductor_;
  if (e < 0) e += conductor_;
  return zeta_powers_[static_cast<std::size_t>(e)];
}

CycloNumber::CycloNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    throw std::invalid_argument("CycloNumber: coefficient vector length must equal phi(m)");
}

CycloNumber CycloNumber::zero(const FieldPtr& field) {
  return CycloNumber(field, std::vector<Rational>(field->degree(), Rational(0)));
}

CycloNumber CycloNumber::one(const FieldPtr& field) { return from_rational(field, Rational(1)); }

CycloNumber CycloNumber::from_rational(const FieldPtr& field, const Rational& value) {
  std::vector<Rational> v(field->degree(), Rational(0));
  v[0] = value;
  return CycloNumber(field, std::move(v));
}

CycloNumber CycloNumber::root_of_unity(const FieldPtr& field, const Int& exponent) {
  const auto& row = field->power_of_zeta(exponent);
  std::vector<Rational> v(field->degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(row[i]);
  return CycloNumber(field, std::move(v));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycloNumber: value is not rational");
  return coeffs_[0];
}

void require_same_field(const CycloNumber& a, const CycloNumber& b) {
  if (a.field()->conductor() != b.field()->conductor())
    throw std::invalid_argument("CycloNumber: mismatched conductors");
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  require_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

CycloNumber CycloNumber::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return CycloNumber(field_, std::move(v));
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  require_same_field(a, b);
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
  return CycloNumber(a.field_, std::move(v));
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  require_same_field(a, b);
  std::size_t n = a.coeffs_.size();
  const CycloField& field = *a.field_;
  // Convolution, then fold the overflow degrees through zeta^e tables.
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t e = 0; e < prod.size(); ++e) {
    if (prod[e] == 0) continue;
    const auto& row = field.power_of_zeta(Int(e));
    for (std::size_t i = 0; i < n; ++i)
      if (row[i] != 0) v[i] += prod[e] * Rational(row[i]);
  }
  return CycloNumber(a.field_, std::move(v));
}

CycloNumber operator*(const Rational& s, const CycloNumber& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = s * c;
  return CycloNumber(a.field_, std::move(v));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNumber: inverse of zero");
  // Extended Euclid in Q[x] against the modulus.
  RatPoly r0 = to_rational(field_->modulus());
  RatPoly r1{std::vector<Rational>(coeffs_)};
  RatPoly s0, s1 = RatPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("CycloNumber: modulus not coprime to element");
  Rational scale = Rational(1) / r0.coeff(0);
  std::vector<Rational> v(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = scale * s0.coeff(i);
  return CycloNumber(field_, std::move(v));
}

CycloNumber CycloNumber::pow(const Int& exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloNumber base = *this;
  CycloNumber acc = one(field_);
  Int e = exponent;
  while (e > 0) {
    if (e % 2 == 1) acc = acc * base;
    base = base * base;
    e /= 2;
  }
  return acc;
}

CycloNumber CycloNumber::galois_apply(const Int& j) const {
  if (gcd(j, field_->conductor()) != 1)
    throw std::invalid_argument("galois_apply: exponent must be coprime to the conductor");
  std::vector<Rational> v(field_->degree(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = field_->power_of_zeta(Int(i) * j);
    for (std::size_t t = 0; t < v.size(); ++t)
      if (row[t] != 0) v[t] += coeffs_[i] * Rational(row[t]);
  }
  return CycloNumber(field_, std::move(v));
}

std::optional<Int> CycloNumber::root_of_unity_order() const {
  Int m = field_->conductor();
  Int bound = lcm(Int(2), m);
  if (pow(bound) != one(field_)) return std::nullopt;
  for (const Int& d : divisors(bound))
    if (pow(d) == one(field_)) return d;
  return std::nullopt;
}

std::string CycloNumber::to_string() const {
  return vucert::to_string(RatPoly{std::vector<Rational>(coeffs_)}, "z");
}

std::vector<CycloNumber> roots_of_unity_in(const FieldPtr& field) {
  std::vector<CycloNumber> out;
  Int m = field->conductor();
  for (Int t = 0; t < m; ++t) out.push_back(CycloNumber::root_of_unity(field, t));
  if (m % 2 == 1) {
    std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) out.push_back(-out[i]);
  }
  return out;
}

bool CycloPoly::is_monic() const {
  return !coeffs.empty() && coeffs.back() == CycloNumber::one(field);
}

CycloNumber CycloPoly::evaluate(const CycloNumber& x) const {
  CycloNumber acc = CycloNumber::zero(field);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string CycloPoly::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const CycloNumber& c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    bool unit = c == CycloNumber::one(field);
    if (i == 0) {
      os << "(" << c.to_string() << ")";
    } else {
      if (!unit) os << "(" << c.to_string() << ")*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CycloPoly mul(const CycloPoly& a, const CycloPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return CycloPoly{a.field, {}};
  std::vector<CycloNumber> v(a.coeffs.size() + b.coeffs.size() - 1, CycloNumber::zero(a.field));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) v[i + j] = v[i + j] + a.coeffs[i] * b.coeffs[j];
  return CycloPoly{a.field, std::move(v)};
}

CycloPoly galois_apply(const CycloPoly& p, const Int& j) {
  std::vector<CycloNumber> v;
  v.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) v.push_back(c.galois_apply(j));
  return CycloPoly{p.field, std::move(v)};
}

RatPoly galois_norm(const CycloPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("galois_norm: polynomial must be monic");
  CycloPoly acc{p.field, {CycloNumber::one(p.field)}};
  for (const Int& j : p.field->galois_exponents()) acc = mul(acc, galois_apply(p, j));
  std::vector<Rational> v;
  v.reserve(acc.coeffs.size());
  for (const auto& c : acc.coeffs) {
    if (!c.is_rational())
      throw std::logic_error("galois_norm: conjugate product has an irrational coefficient");
    v.push_back(c.rational_value());
  }
  return RatPoly(std::move(v));
}

}  // namespace vucert
