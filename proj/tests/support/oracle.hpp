#ifndef HAHN_TESTS_ORACLE_HPP
#define HAHN_TESTS_ORACLE_HPP

// Reference computations for integer-exponent series kept as plain maps.
// Nothing here calls the library's arithmetic; conversion only reads or
// builds terms.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hahn/series.hpp"

namespace oracle {

using Q = hahn::Rational;
using Terms = std::map<std::int64_t, Q>;

inline Terms terms_of(const hahn::Series& s) {
  Terms out;
  for (const auto& t : s.terms()) out[static_cast<std::int64_t>(boost::multiprecision::numerator(t.exponent.scalar()))] = t.coefficient;
  return out;
}

inline hahn::Series series_of(const hahn::SeriesSpace& space, const Terms& terms) {
  std::vector<hahn::Term> out;
  for (const auto& [g, c] : terms) out.push_back({c, hahn::GroupElement{Q(g)}});
  return space.make(std::move(out));
}

inline void prune(Terms& t) {
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
}

inline Terms plus(Terms a, const Terms& b) {
  for (const auto& [g, c] : b) a[g] += c;
  prune(a);
  return a;
}

inline Terms minus(Terms a, const Terms& b) {
  for (const auto& [g, c] : b) a[g] -= c;
  prune(a);
  return a;
}

inline Terms product(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [g, c] : a)
    for (const auto& [h, d] : b) out[g + h] += c * d;
  prune(out);
  return out;
}

/// min exponent; nullopt stands for ∞.
inline std::optional<std::int64_t> value(const Terms& t) {
  if (t.empty()) return std::nullopt;
  return t.begin()->first;
}

/// a ≥ b on values with ∞ maximal.
inline bool value_geq(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

inline Terms euler_derivative(const Terms& t) {
  Terms out;
  for (const auto& [g, c] : t) out[g] = c * g;
  prune(out);
  return out;
}

inline Terms ddt_derivative(const Terms& t) {
  Terms out;
  for (const auto& [g, c] : t) out[g - 1] = c * g;
  prune(out);
  return out;
}

/// c t^g ↦ (c/g) t^g; nullopt if a constant term is present.
inline std::optional<Terms> euler_antiderivative(const Terms& t) {
  Terms out;
  for (const auto& [g, c] : t) {
    if (g == 0) return std::nullopt;
    out[g] = c / g;
  }
  return out;
}

/// c t^g ↦ c/(g+1) t^(g+1); nullopt if a t^-1 term is present.
inline std::optional<Terms> ddt_antiderivative(const Terms& t) {
  Terms out;
  for (const auto& [g, c] : t) {
    if (g == -1) return std::nullopt;
    out[g + 1] = c / (g + 1);
  }
  return out;
}

inline std::pair<Terms, Terms> parity_split(const Terms& t) {
  std::pair<Terms, Terms> out;
  for (const auto& [g, c] : t) (g % 2 == 0 ? out.first : out.second)[g] = c;
  return out;
}

/// Extensional inclusion B(c1, r1) ⊆ B(c2, r2) probed over x = c1 and
/// x = c1 + t^g for g in [lo, hi]; radii are nullopt (∞) or inside the window.
inline bool probe_ball_subset(const Terms& c1, std::optional<std::int64_t> r1, const Terms& c2,
                              std::optional<std::int64_t> r2, std::int64_t lo, std::int64_t hi) {
  auto in = [](const Terms& center, std::optional<std::int64_t> radius, const Terms& x) {
    return value_geq(value(minus(x, center)), radius);
  };
  std::vector<Terms> probes{c1};
  for (std::int64_t g = lo; g <= hi; ++g) probes.push_back(plus(c1, Terms{{g, Q(1)}}));
  for (const auto& x : probes)
    if (in(c1, r1, x) && !in(c2, r2, x)) return false;
  return true;
}

}  // namespace oracle

#endif  // HAHN_TESTS_ORACLE_HPP
