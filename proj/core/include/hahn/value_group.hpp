#ifndef HAHN_VALUE_GROUP_HPP
#define HAHN_VALUE_GROUP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hahn/field.hpp"

namespace hahn {

/// Element of an ordered abelian group built from Z, Q and lexicographic
/// products. Lexicographic products are stored flattened, left component
/// first, so comparison is plain lexicographic order on the components.
class GroupElement {
 public:
  using Components = boost::container::small_vector<Rational, 2>;

  GroupElement() : components_{Rational{0}} {}
  explicit GroupElement(Rational scalar) : components_{std::move(scalar)} {}
  explicit GroupElement(Components components);
  GroupElement(std::initializer_list<std::int64_t> components);

  std::size_t rank() const { return components_.size(); }
  std::span<const Rational> components() const { return {components_.data(), components_.size()}; }
  const Rational& operator[](std::size_t i) const { return components_[i]; }
  /// The single component of a rank-one element.
  const Rational& scalar() const;
  bool is_zero() const;

  /// `5`, `5/2`, or `(1,-2)` for rank > 1.
  std::string to_string() const;

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return std::equal(a.components_.begin(), a.components_.end(), b.components_.begin(), b.components_.end(),
                      rational_equal);
  }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  Components components_;
};

class ValueGroup;
using ValueGroupPtr = std::shared_ptr<const ValueGroup>;

/// Descriptor for one of the built-in ordered abelian groups.
class ValueGroup {
 public:
  enum class Kind { Integers, Rationals, Lex };

  static ValueGroupPtr integers();
  static ValueGroupPtr rationals();
  /// Lexicographic product, left component dominant.
  static ValueGroupPtr lex(ValueGroupPtr left, ValueGroupPtr right);
  /// `int`, `rat` or `lex2` (= lex(int, int)).
  static ValueGroupPtr from_name(std::string_view name);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return integral_.size(); }
  const ValueGroupPtr& left() const { return left_; }
  const ValueGroupPtr& right() const { return right_; }

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  std::strong_ordering compare(const GroupElement& a, const GroupElement& b) const;

  /// Rank and integrality check.
  bool contains(const GroupElement& g) const;
  /// Parses `-3`, `5/2`, `(1,-2)`; nested tuples are flattened. Throws ParseError.
  GroupElement parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const ValueGroup& a, const ValueGroup& b) { return a.integral_ == b.integral_; }

 private:
  ValueGroup(Kind kind, std::vector<bool> integral, ValueGroupPtr left, ValueGroupPtr right);

  void require(const GroupElement& g) const;

  Kind kind_;
  std::vector<bool> integral_;
  ValueGroupPtr left_;
  ValueGroupPtr right_;
};

}  // namespace hahn

#endif  // HAHN_VALUE_GROUP_HPP
