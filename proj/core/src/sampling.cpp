#include "hahn/sampling.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace hahn {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

bool Sampler::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

Coefficient Sampler::coefficient(const CoefficientField& field) {
  if (field.is_prime_field()) return Coefficient(uniform(1, field.characteristic() - 1));
  const std::int64_t num = uniform(1, 9) * (chance(1, 2) ? -1 : 1);
  return Rational(num, uniform(1, 5));
}

GroupElement Sampler::exponent(const ValueGroup& group, std::int64_t lo, std::int64_t hi) {
  if (group.kind() == ValueGroup::Kind::Integers) return GroupElement{Rational(uniform(lo, hi))};
  if (group.kind() == ValueGroup::Kind::Rationals) {
    const std::int64_t den = uniform(1, 3);
    return GroupElement{Rational(uniform(lo * den, hi * den), den)};
  }
  GroupElement::Components parts;
  const GroupElement left = exponent(*group.left(), lo, hi);
  const GroupElement right = exponent(*group.right(), lo, hi);
  for (const auto& c : left.components()) parts.push_back(c);
  for (const auto& c : right.components()) parts.push_back(c);
  return GroupElement{std::move(parts)};
}

Series Sampler::series(const SeriesSpace& space, const Shape& shape) {
  const std::size_t want = static_cast<std::size_t>(
      uniform(static_cast<std::int64_t>(shape.min_terms), static_cast<std::int64_t>(shape.max_terms)));
  std::set<GroupElement> used;
  std::vector<Term> terms;
  // Bounded retries so a narrow window cannot loop forever.
  for (std::size_t attempts = 0; terms.size() < want && attempts < 64 * (want + 1); ++attempts) {
    GroupElement e = exponent(space.group(), shape.lo, shape.hi);
    if (shape.allowed && !shape.allowed(e)) continue;
    if (!used.insert(e).second) continue;
    terms.push_back(Term{coefficient(space.field()), std::move(e)});
  }
  return space.make(std::move(terms));
}

}  // namespace hahn
