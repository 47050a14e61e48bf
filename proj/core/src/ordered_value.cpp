#include "hahn/ordered_value.hpp"

#include <stdexcept>

namespace hahn {

const GroupElement& OrderedValue::finite_value() const {
  if (!value_) throw std::logic_error("finite_value() on infinity");
  return *value_;
}

std::string OrderedValue::to_string() const { return value_ ? value_->to_string() : "inf"; }

OrderedValue operator+(const OrderedValue& a, const OrderedValue& b) {
  if (a.is_infinite() || b.is_infinite()) return OrderedValue::infinity();
  return OrderedValue{a.finite_value() + b.finite_value()};
}

std::strong_ordering operator<=>(const OrderedValue& a, const OrderedValue& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return a.finite_value() <=> b.finite_value();
}

std::strong_ordering ov_compare(const OrderedValue& x, const OrderedValue& y) { return x <=> y; }

OrderedValue parse_ordered_value(const ValueGroup& group, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "∞") return OrderedValue::infinity();
  return OrderedValue{group.parse(text)};
}

}  // namespace hahn
