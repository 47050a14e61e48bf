#ifndef HAHN_SERIES_HPP
#define HAHN_SERIES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hahn/field.hpp"
#include "hahn/ordered_value.hpp"
#include "hahn/value_group.hpp"

namespace hahn {

/// The monomial coefficient * t^exponent.
struct Term {
  Coefficient coefficient;
  GroupElement exponent;

  friend bool operator==(const Term& a, const Term& b) {
    return rational_equal(a.coefficient, b.coefficient) && a.exponent == b.exponent;
  }
};

class Series;

/// k((G)) for a chosen coefficient field k and value group G.
class SeriesSpace {
 public:
  SeriesSpace();  // Q((Z))
  SeriesSpace(CoefficientField field, ValueGroupPtr group);

  const CoefficientField& field() const { return field_; }
  const ValueGroup& group() const { return *group_; }
  const ValueGroupPtr& group_ptr() const { return group_; }

  Series zero() const;
  /// Zero with truncation bound: the ball B_truncation(0) seen as a quotient class.
  Series zero(OrderedValue truncation) const;
  Series monomial(const Coefficient& c, const GroupElement& g) const;
  Series constant(const Coefficient& c) const;
  Series make(std::vector<Term> terms, OrderedValue truncation = OrderedValue::infinity()) const;
  /// Integer or rational exponent shorthand for rank-one groups.
  GroupElement exponent(const Rational& e) const;

  Series parse(std::string_view text) const;
  Series from_json(const nlohmann::json& j) const;

  friend bool operator==(const SeriesSpace& a, const SeriesSpace& b) {
    return a.field_ == b.field_ && (a.group_ == b.group_ || *a.group_ == *b.group_);
  }

 private:
  CoefficientField field_;
  ValueGroupPtr group_;
};

/// Finite-support element of k((G)), known modulo B_truncation(0).
///
/// Invariants: terms sorted by strictly ascending exponent, no zero
/// coefficient, every exponent below the truncation bound.
class Series {
 public:
  Series() = default;

  const SeriesSpace& space() const { return space_; }
  std::span<const Term> terms() const { return terms_; }
  const OrderedValue& truncation() const { return truncation_; }

  bool is_exact() const { return truncation_.is_infinite(); }
  bool support_empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Stored coefficient at g; zero if g is not in the support.
  Coefficient coefficient(const GroupElement& g) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series truncate(const Series& s, const OrderedValue& alpha);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  friend class SeriesSpace;
  Series(SeriesSpace space, std::vector<Term> terms, OrderedValue truncation)
      : space_(std::move(space)), terms_(std::move(terms)), truncation_(std::move(truncation)) {}

  SeriesSpace space_;
  std::vector<Term> terms_;
  OrderedValue truncation_;
};

/// Normalizes: drops zero coefficients and terms at or above the truncation,
/// merges duplicate exponents.
Series make_series(const SeriesSpace& space, std::vector<Term> terms,
                   OrderedValue truncation = OrderedValue::infinity());

/// min supp(s); ∞ for the exact zero. Throws IndeterminateValuation if the
/// support is empty below a finite truncation.
OrderedValue valuation(const Series& s);
/// v(s) if determined, otherwise the truncation bound (s ∈ B_bound(0)).
OrderedValue value_lower_bound(const Series& s);
bool is_exact_zero(const Series& s);

Series add(const Series& a, const Series& b);
Series neg(const Series& s);
Series scalar_mul(const Coefficient& c, const Series& s);
/// Convolution. Result truncation is min(trunc(a) + v(b), trunc(b) + v(a)).
Series mul(const Series& a, const Series& b);

/// The quotient map k((G)) -> k((G)) / B_alpha(0).
Series truncate(const Series& s, const OrderedValue& alpha);
/// Value of the class s + B_alpha(0): v(s) if v(s) < alpha, else ∞.
OrderedValue quotient_valuation(const Series& s, const OrderedValue& alpha);

/// Throws EmptySupport on an empty support.
const Term& leading_term(const Series& s);

/// Canonical text form, e.g. `3*t^-2 + 1/2 + t^5 + O(9)`.
std::string to_string(const Series& s);
Series parse_series(const SeriesSpace& space, std::string_view text);

nlohmann::json to_json(const Series& s);

}  // namespace hahn

#endif  // HAHN_SERIES_HPP
