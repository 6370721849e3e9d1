#include "vucert/rational.hpp"

#include <algorithm>
#include <cctype>

namespace vucert {

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  out = negative ? Int(-value) : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Int num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(num);
  }
  Int den;
  if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int euler_phi(const Int& m) {
  Int n = m < 0 ? Int(-m) : m;
  if (n == 0) return 0;
  Int result = 1;
  Int remaining = n;
  for (Int p = 2; p * p <= remaining; ++p) {
    if (remaining % p == 0) {
      result *= p - 1;
      remaining /= p;
      while (remaining % p == 0) {
        result *= p;
        remaining /= p;
      }
    }
  }
  if (remaining > 1) result *= remaining - 1;
  return result;
}

std::vector<Int> divisors(const Int& m) {
  Int n = m < 0 ? Int(-m) : m;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace vucert
