#ifndef HAHN_FIELD_HPP
#define HAHN_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hahn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Field elements are stored as rationals; in F_p they are integers in [0, p).
using Coefficient = Rational;

inline const Integer& numer(const Rational& q) { return q.backend().data().numerator(); }
inline const Integer& denom(const Rational& q) { return q.backend().data().denominator(); }

/// Equality of normalized rationals without going through the ordering.
inline bool rational_equal(const Rational& a, const Rational& b) {
  return numer(a) == numer(b) && denom(a) == denom(b);
}

/// Exact three-way comparison by cross multiplication.
inline std::strong_ordering rational_compare(const Rational& a, const Rational& b) {
  const Integer& da = denom(a);
  const Integer& db = denom(b);
  const int c = (da == 1 && db == 1) ? numer(a).compare(numer(b)) : Integer(numer(a) * db).compare(numer(b) * da);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

/// Canonical text form: `n` or `n/d` with d > 1.
std::string format_rational(const Rational& q);

/// Accepts `[-]n` or `[-]n/d` with d > 0.
Rational parse_rational(std::string_view text);

bool is_prime(std::int64_t n);

/// Exact coefficient field: either Q or F_p.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField{0}; }
  static CoefficientField prime(std::int64_t p);
  /// `rationals`, `Q`, `prime:<p>` or `F<p>`.
  static CoefficientField from_name(std::string_view name);

  bool is_prime_field() const { return modulus_ != 0; }
  std::int64_t characteristic() const { return modulus_; }

  Coefficient zero() const { return Coefficient{0}; }
  Coefficient one() const { return Coefficient{1}; }

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  /// Throws FieldError on zero.
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const;

  /// Image of a rational number in this field. Throws FieldError when the
  /// denominator vanishes mod p.
  Coefficient from_rational(const Rational& q) const;
  /// True if `a` is in normal form for this field.
  bool contains(const Coefficient& a) const;

  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  explicit CoefficientField(std::int64_t modulus) : modulus_(modulus) {}

  Coefficient reduce(const Integer& n) const;

  std::int64_t modulus_ = 0;
};

}  // namespace hahn

#endif  // HAHN_FIELD_HPP
