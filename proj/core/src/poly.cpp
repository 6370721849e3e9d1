#include "vucert/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace vucert {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

bool has_integer_coefficients(const RatPoly& p) {
  for (const auto& c : p.coeffs())
    if (denominator(c) != 1) return false;
  return true;
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Int> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (denominator(c) != 1) throw std::invalid_argument("polynomial has fractional coefficients");
    v.push_back(numerator(c));
  }
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  RatPoly rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    Rational factor = rem.leading() / b.leading();
    std::size_t shift = rem.degree() - b.degree();
    q[shift] = factor;
    rem = rem - factor * RatPoly::monomial(shift) * b;
  }
  return {RatPoly(std::move(q)), rem};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw std::invalid_argument("polynomial division is not exact");
  return to_integer(q);
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv_lead = Rational(1) / a.leading();
  return inv_lead * a;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  RatPoly g = monic_gcd(p, p.derivative());
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree part: gcd does not divide");
  Rational inv_lead = Rational(1) / q.leading();
  return inv_lead * q;
}

IntPoly cyclotomic_poly(const Int& m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: index must be positive");
  static std::map<Int, IntPoly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  IntPoly result;
  if (m == 1) {
    result = IntPoly({Int(-1), Int(1)});
  } else {
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    std::vector<Int> xm(static_cast<std::size_t>(m) + 1, Int(0));
    xm.front() = -1;
    xm.back() = 1;
    IntPoly numer{std::vector<Int>(std::move(xm))};
    IntPoly denom = IntPoly::constant(Int(1));
    for (const Int& d : divisors(m))
      if (d < m) denom = denom * cyclotomic_poly(d);
    result = exact_div(numer, denom);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(m, result);
  return result;
}

namespace {

void require_monic_nonzero_constant(const IntPoly& p, const char* who) {
  if (!p.is_monic()) throw std::invalid_argument(std::string(who) + ": polynomial must be monic");
  if (p.coeff(0) == 0)
    throw std::invalid_argument(std::string(who) + ": constant term must be nonzero");
}

// All d >= 1 with phi(d) <= n. Since phi(d) >= sqrt(d/2), d <= 2 n^2.
std::vector<Int> cyclotomic_candidates(long n) {
  std::vector<Int> out;
  Int bound = Int(2) * n * n;
  for (Int d = 1; d <= bound; ++d)
    if (euler_phi(d) <= n) out.push_back(d);
  return out;
}

}  // namespace

std::optional<std::vector<Int>> is_cyclotomic_product(const IntPoly& p) {
  require_monic_nonzero_constant(p, "is_cyclotomic_product");
  std::vector<Int> indices;
  RatPoly rem = to_rational(p);
  for (const Int& d : cyclotomic_candidates(p.degree())) {
    RatPoly phi = to_rational(cyclotomic_poly(d));
    while (rem.degree() >= phi.degree()) {
      auto [q, r] = divmod(rem, phi);
      if (!r.is_zero()) break;
      indices.push_back(d);
      rem = std::move(q);
    }
  }
  if (rem.degree() != 0 || rem.coeff(0) != 1) return std::nullopt;
  return indices;
}

bool kronecker_oracle(const IntPoly& p) {
  require_monic_nonzero_constant(p, "kronecker_oracle");
  Int big_order = 1;
  for (const Int& d : cyclotomic_candidates(p.degree())) big_order = lcm(big_order, d);
  RatPoly sqfree = squarefree_part(to_rational(p));
  if (sqfree.degree() == 0) return true;
  // q | x^L - 1 iff x^L = 1 in Q[x]/(q); binary exponentiation keeps every
  // intermediate at degree < deg q, so L may be large.
  auto mulmod = [&](const RatPoly& a, const RatPoly& b) { return divmod(a * b, sqfree).second; };
  RatPoly base = divmod(RatPoly::monomial(1), sqfree).second;
  RatPoly acc = RatPoly::constant(Rational(1));
  Int e = big_order;
  while (e > 0) {
    if (e % 2 == 1) acc = mulmod(acc, base);
    base = mulmod(base, base);
    e /= 2;
  }
  return acc == RatPoly::constant(Rational(1));
}

std::pair<IntPoly, Int> scale_to_monic_integer(const RatPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("scale_to_monic_integer: input must be monic");
  Int scale = 1;
  for (const auto& c : p.coeffs()) scale = lcm(scale, denominator(c));
  long n = p.degree();
  std::vector<Int> v(static_cast<std::size_t>(n) + 1);
  Int power = 1;  // scale^(n - i) applied to coefficient i
  for (long i = n; i >= 0; --i) {
    Rational scaled = p.coeff(static_cast<std::size_t>(i)) * Rational(power);
    if (denominator(scaled) != 1) throw std::logic_error("scale_to_monic_integer: lcm failed");
    v[static_cast<std::size_t>(i)] = numerator(scaled);
    power *= scale;
  }
  return {IntPoly(std::move(v)), scale};
}

namespace {

template <class T>
std::string format_poly(const Poly<T>& p, const std::string& var,
                        std::string (*fmt)(const T&), bool (*is_negative)(const T&),
                        T (*negate)(const T&)) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    T c = p.coeff(static_cast<std::size_t>(i));
    if (c == T(0)) continue;
    bool neg = is_negative(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    T mag = neg ? negate(c) : c;
    bool unit = mag == T(1);
    if (i == 0) {
      os << fmt(mag);
    } else {
      if (!unit) os << fmt(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string fmt_int(const Int& c) { return c.str(); }
bool neg_int(const Int& c) { return c < 0; }
Int negate_int(const Int& c) { return -c; }
std::string fmt_rat(const Rational& c) { return format_rational(c); }
bool neg_rat(const Rational& c) { return c < 0; }
Rational negate_rat(const Rational& c) { return -c; }

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) {
  return format_poly<Int>(p, var, fmt_int, neg_int, negate_int);
}

std::string to_string(const RatPoly& p, const std::string& var) {
  return format_poly<Rational>(p, var, fmt_rat, neg_rat, negate_rat);
}

}  // namespace vucert
