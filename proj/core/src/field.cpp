#include "hahn/field.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "hahn/errors.hpp"

namespace hahn {

std::string format_rational(const Rational& q) {
  const Integer& num = boost::multiprecision::numerator(q);
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool integral(const Rational& q) { return denom(q) == 1; }

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits in '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unexpected character '" + std::string(1, c) + "' in number '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  const Integer num = parse_integer(text.substr(0, slash), true);
  const Integer den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(std::int64_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  return CoefficientField{p};
}

CoefficientField CoefficientField::from_name(std::string_view name) {
  if (name == "rationals" || name == "Q" || name == "rat") return rationals();
  std::string_view digits;
  if (name.starts_with("prime:"))
    digits = name.substr(6);
  else if (name.starts_with("F"))
    digits = name.substr(1);
  else
    throw ParseError("unknown field '" + std::string(name) + "'");
  const Integer p = parse_integer(digits, false);
  if (p > Integer(std::numeric_limits<std::int64_t>::max()))
    throw ParseError("modulus too large: " + std::string(digits));
  return prime(static_cast<std::int64_t>(p));
}

Coefficient CoefficientField::reduce(const Integer& n) const {
  Integer r = n % modulus_;
  if (r < 0) r += modulus_;
  return Coefficient(r);
}

Coefficient CoefficientField::add(const Coefficient& a, const Coefficient& b) const {
  if (!is_prime_field()) {
    if (integral(a) && integral(b)) return Rational{numer(a) + numer(b)};
    return a + b;
  }
  return reduce(boost::multiprecision::numerator(a) + boost::multiprecision::numerator(b));
}

Coefficient CoefficientField::sub(const Coefficient& a, const Coefficient& b) const {
  if (!is_prime_field()) {
    if (integral(a) && integral(b)) return Rational{numer(a) - numer(b)};
    return a - b;
  }
  return reduce(boost::multiprecision::numerator(a) - boost::multiprecision::numerator(b));
}

Coefficient CoefficientField::mul(const Coefficient& a, const Coefficient& b) const {
  if (!is_prime_field()) {
    if (integral(a) && integral(b)) return Rational{numer(a) * numer(b)};
    return a * b;
  }
  return reduce(boost::multiprecision::numerator(a) * boost::multiprecision::numerator(b));
}

Coefficient CoefficientField::neg(const Coefficient& a) const {
  if (!is_prime_field()) return -a;
  return reduce(-boost::multiprecision::numerator(a));
}

Coefficient CoefficientField::inv(const Coefficient& a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (!is_prime_field()) return Coefficient(1) / a;
  // Fermat: a^(p-2) mod p.
  const Integer p = modulus_;
  return Coefficient(boost::multiprecision::powm(boost::multiprecision::numerator(a), p - 2, p));
}

Coefficient CoefficientField::div(const Coefficient& a, const Coefficient& b) const { return mul(a, inv(b)); }

Coefficient CoefficientField::from_rational(const Rational& q) const {
  if (!is_prime_field()) return q;
  const Coefficient den = reduce(boost::multiprecision::denominator(q));
  if (den == 0)
    throw FieldError("denominator of " + format_rational(q) + " vanishes in " + name());
  return mul(reduce(boost::multiprecision::numerator(q)), inv(den));
}

bool CoefficientField::contains(const Coefficient& a) const {
  if (!is_prime_field()) return true;
  return boost::multiprecision::denominator(a) == 1 && a >= 0 && a < modulus_;
}

std::string CoefficientField::name() const {
  return is_prime_field() ? "prime:" + std::to_string(modulus_) : "rationals";
}

}  // namespace hahn
