#ifndef HAHN_ORDERED_VALUE_HPP
#define HAHN_ORDERED_VALUE_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "hahn/value_group.hpp"

namespace hahn {

/// A value group element or the adjoined top element. Default-constructed
/// values are infinite, matching v(0) = ∞.
class OrderedValue {
 public:
  OrderedValue() = default;
  explicit OrderedValue(GroupElement g) : value_(std::move(g)) {}

  static OrderedValue infinity() { return OrderedValue{}; }
  static OrderedValue finite(GroupElement g) { return OrderedValue{std::move(g)}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const GroupElement& finite_value() const;

  /// `inf` or the element's serialization.
  std::string to_string() const;

  /// ∞ is absorbing.
  friend OrderedValue operator+(const OrderedValue& a, const OrderedValue& b);

  friend bool operator==(const OrderedValue&, const OrderedValue&) = default;
  friend std::strong_ordering operator<=>(const OrderedValue& a, const OrderedValue& b);

 private:
  std::optional<GroupElement> value_;
};

std::strong_ordering ov_compare(const OrderedValue& x, const OrderedValue& y);

inline OrderedValue min_value(const OrderedValue& a, const OrderedValue& b) { return b < a ? b : a; }
inline OrderedValue max_value(const OrderedValue& a, const OrderedValue& b) { return a < b ? b : a; }

/// g < bound, without building an OrderedValue.
inline bool below(const GroupElement& g, const OrderedValue& bound) {
  return bound.is_infinite() || g < bound.finite_value();
}

/// Parses `inf` or a group element.
OrderedValue parse_ordered_value(const ValueGroup& group, std::string_view text);

}  // namespace hahn

#endif  // HAHN_ORDERED_VALUE_HPP
