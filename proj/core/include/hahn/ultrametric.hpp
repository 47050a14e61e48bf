#ifndef HAHN_ULTRAMETRIC_HPP
#define HAHN_ULTRAMETRIC_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hahn/errors.hpp"
#include "hahn/ordered_value.hpp"
#include "hahn/report.hpp"

namespace hahn {

// Contract for the carrier of a valued abelian group. `valuation` throws
// IndeterminateValuation when the element is only known up to a ball around
// zero; `value_lower_bound` then returns the radius of that ball.
template <class T>
concept ValuedGroupElement = std::copyable<T> && std::equality_comparable<T> &&
                             requires(const T& a, const T& b) {
                               { a + b } -> std::convertible_to<T>;
                               { a - b } -> std::convertible_to<T>;
                               { -a } -> std::convertible_to<T>;
                               { valuation(a) } -> std::same_as<OrderedValue>;
                               { value_lower_bound(a) } -> std::same_as<OrderedValue>;
                               { is_exact_zero(a) } -> std::same_as<bool>;
                               { to_string(a) } -> std::convertible_to<std::string>;
                             };

/// B_radius(center). An infinite radius is the singleton {center}.
template <ValuedGroupElement T>
struct Ball {
  T center;
  OrderedValue radius;

  friend bool operator==(const Ball&, const Ball&) = default;
};

/// v(center - x) >= radius. Throws IndeterminateValuation only when the
/// precision of the operands is too low to decide.
template <ValuedGroupElement T>
bool ball_contains(const Ball<T>& ball, const T& x) {
  const T diff = ball.center - x;
  const OrderedValue bound = value_lower_bound(diff);
  if (bound >= ball.radius) return true;
  return valuation(diff) >= ball.radius;
}

/// inner ⊆ outer, decided by the center/radius criterion.
template <ValuedGroupElement T>
bool ball_subset(const Ball<T>& inner, const Ball<T>& outer) {
  return inner.radius >= outer.radius && ball_contains(outer, inner.center);
}

/// Finite chain of balls, stored outermost first.
template <ValuedGroupElement T>
class Nest {
 public:
  Nest() = default;

  /// Sorts by inclusion and throws InvalidNest if two balls are incomparable.
  explicit Nest(std::vector<Ball<T>> balls) : balls_(std::move(balls)) {
    std::stable_sort(balls_.begin(), balls_.end(),
                     [](const Ball<T>& a, const Ball<T>& b) { return a.radius < b.radius; });
    for (std::size_t i = 1; i < balls_.size(); ++i) {
      if (!ball_subset(balls_[i], balls_[i - 1]))
        throw InvalidNest("balls B_" + balls_[i - 1].radius.to_string() + "(" + to_string(balls_[i - 1].center) +
                          ") and B_" + balls_[i].radius.to_string() + "(" + to_string(balls_[i].center) +
                          ") are not comparable under inclusion");
    }
  }

  std::span<const Ball<T>> balls() const { return balls_; }
  std::size_t size() const { return balls_.size(); }
  bool empty() const { return balls_.empty(); }
  const Ball<T>& outermost() const { return balls_.front(); }
  const Ball<T>& innermost() const { return balls_.back(); }

 private:
  std::vector<Ball<T>> balls_;
};

/// An element of every ball (the innermost center); nullopt for the empty nest.
template <ValuedGroupElement T>
std::optional<T> intersect_finite_nest(const Nest<T>& nest) {
  if (nest.empty()) return std::nullopt;
  return nest.innermost().center;
}

template <ValuedGroupElement T>
std::optional<T> intersect_finite_nest(std::vector<Ball<T>> balls) {
  return intersect_finite_nest(Nest<T>{std::move(balls)});
}

/// Checks the valued-group axioms on sampled pairs: v(a) = ∞ iff a = 0, the
/// ultrametric triangle law, and equality v(a - b) = min{va, vb} when va ≠ vb.
template <ValuedGroupElement T>
CheckReport check_ultrametric(std::span<const std::pair<T, T>> samples) {
  CheckReport report{"ultrametric"};
  auto check_zero_axiom = [&](const T& x) {
    if ((valuation(x).is_infinite()) != is_exact_zero(x))
      report.flag("v(" + to_string(x) + ") = " + valuation(x).to_string() + " contradicts zero test");
  };
  for (const auto& [a, b] : samples) {
    ++report.checked;
    check_zero_axiom(a);
    check_zero_axiom(b);
    const OrderedValue va = valuation(a);
    const OrderedValue vb = valuation(b);
    const OrderedValue vd = valuation(a - b);
    const OrderedValue lower = min_value(va, vb);
    if (vd < lower) {
      report.flag("v(" + to_string(a) + " - " + to_string(b) + ") = " + vd.to_string() + " < min = " +
                  lower.to_string());
    } else if (va != vb && vd != lower) {
      report.flag("v(" + to_string(a) + " - " + to_string(b) + ") = " + vd.to_string() + " but values differ, min = " +
                  lower.to_string());
    }
  }
  return report;
}

}  // namespace hahn

#endif  // HAHN_ULTRAMETRIC_HPP
