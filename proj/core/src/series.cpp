#include "hahn/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hahn/errors.hpp"

namespace hahn {

SeriesSpace::SeriesSpace() : SeriesSpace(CoefficientField::rationals(), ValueGroup::integers()) {}

SeriesSpace::SeriesSpace(CoefficientField field, ValueGroupPtr group) : field_(field), group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("series space needs a value group");
}

Series SeriesSpace::zero() const { return Series{*this, {}, OrderedValue::infinity()}; }

Series SeriesSpace::zero(OrderedValue truncation) const { return Series{*this, {}, std::move(truncation)}; }

Series SeriesSpace::monomial(const Coefficient& c, const GroupElement& g) const {
  return make({Term{c, g}});
}

Series SeriesSpace::constant(const Coefficient& c) const { return monomial(c, group_->zero()); }

Series SeriesSpace::make(std::vector<Term> terms, OrderedValue truncation) const {
  for (auto& term : terms) {
    if (!group_->contains(term.exponent))
      throw std::invalid_argument(term.exponent.to_string() + " is not an exponent in " + group_->name());
    term.coefficient = field_.from_rational(term.coefficient);
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& term : terms) {
    if (!below(term.exponent, truncation)) continue;
    if (!merged.empty() && merged.back().exponent == term.exponent) {
      merged.back().coefficient = field_.add(merged.back().coefficient, term.coefficient);
      if (merged.back().coefficient == 0) merged.pop_back();
      continue;
    }
    if (term.coefficient == 0) continue;
    merged.push_back(std::move(term));
  }
  return Series{*this, std::move(merged), std::move(truncation)};
}

GroupElement SeriesSpace::exponent(const Rational& e) const {
  if (group_->rank() != 1) throw std::invalid_argument("scalar exponent in a group of rank > 1");
  GroupElement g{e};
  if (!group_->contains(g)) throw std::invalid_argument(g.to_string() + " is not in " + group_->name());
  return g;
}

Series make_series(const SeriesSpace& space, std::vector<Term> terms, OrderedValue truncation) {
  return space.make(std::move(terms), std::move(truncation));
}

Coefficient Series::coefficient(const GroupElement& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const GroupElement& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == g) return it->coefficient;
  return Coefficient{0};
}

namespace {

void require_same_space(const Series& a, const Series& b) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument("series from different spaces: " + a.space().field().name() + "/" +
                                a.space().group().name() + " vs " + b.space().field().name() + "/" +
                                b.space().group().name());
}

}  // namespace

namespace {

// Terms of a + b or a - b below the common truncation.
std::vector<Term> merge(const Series& a, const Series& b, const OrderedValue& trunc, bool subtract) {
  require_same_space(a, b);
  const CoefficientField& k = a.space().field();
  const auto at = a.terms();
  const auto bt = b.terms();
  std::vector<Term> out;
  out.reserve(at.size() + bt.size());
  auto ia = at.begin();
  auto ib = bt.begin();
  while (ia != at.end() || ib != bt.end()) {
    const bool take_a = ib == bt.end() || (ia != at.end() && ia->exponent < ib->exponent);
    const bool take_b = !take_a && (ia == at.end() || ib->exponent < ia->exponent);
    const GroupElement& e = take_b ? ib->exponent : ia->exponent;
    if (!below(e, trunc)) break;
    if (take_a) {
      out.push_back(*ia++);
    } else if (take_b) {
      out.push_back(Term{subtract ? k.neg(ib->coefficient) : ib->coefficient, e});
      ++ib;
    } else {
      Coefficient c = subtract ? k.sub(ia->coefficient, ib->coefficient) : k.add(ia->coefficient, ib->coefficient);
      if (c != 0) out.push_back(Term{std::move(c), e});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  OrderedValue trunc = min_value(a.truncation_, b.truncation_);
  auto terms = merge(a, b, trunc, false);
  return Series{a.space_, std::move(terms), std::move(trunc)};
}

Series operator-(const Series& a) {
  const CoefficientField& k = a.space_.field();
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coefficient = k.neg(t.coefficient);
  return Series{a.space_, std::move(out), a.truncation_};
}

Series operator-(const Series& a, const Series& b) {
  OrderedValue trunc = min_value(a.truncation_, b.truncation_);
  auto terms = merge(a, b, trunc, true);
  return Series{a.space_, std::move(terms), std::move(trunc)};
}

Series operator*(const Series& a, const Series& b) {
  require_same_space(a, b);
  OrderedValue trunc = OrderedValue::infinity();
  if (!a.is_exact() || !b.is_exact()) {
    const OrderedValue va = valuation(a);
    const OrderedValue vb = valuation(b);
    trunc = min_value(a.truncation_ + vb, b.truncation_ + va);
  }
  const CoefficientField& k = a.space_.field();
  std::map<GroupElement, Coefficient> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      GroupElement e = x.exponent + y.exponent;
      if (!below(e, trunc)) continue;
      auto [it, inserted] = acc.try_emplace(std::move(e), Coefficient{0});
      it->second = k.add(it->second, k.mul(x.coefficient, y.coefficient));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Term{std::move(c), e});
  return Series{a.space_, std::move(out), std::move(trunc)};
}

OrderedValue valuation(const Series& s) {
  if (!s.support_empty()) return OrderedValue{s.terms().front().exponent};
  if (s.is_exact()) return OrderedValue::infinity();
  throw IndeterminateValuation("valuation of 0 + O(" + s.truncation().to_string() +
                               ") is not determined at this precision");
}

OrderedValue value_lower_bound(const Series& s) {
  if (!s.support_empty()) return OrderedValue{s.terms().front().exponent};
  return s.truncation();
}

bool is_exact_zero(const Series& s) { return s.support_empty() && s.is_exact(); }

Series add(const Series& a, const Series& b) { return a + b; }
Series neg(const Series& s) { return -s; }

Series scalar_mul(const Coefficient& c, const Series& s) {
  const CoefficientField& k = s.space().field();
  const Coefficient ck = k.from_rational(c);
  std::vector<Term> out;
  if (ck != 0) {
    out.reserve(s.size());
    for (const auto& t : s.terms()) out.push_back(Term{k.mul(ck, t.coefficient), t.exponent});
  }
  return s.space().make(std::move(out), s.truncation());
}

Series mul(const Series& a, const Series& b) { return a * b; }

Series truncate(const Series& s, const OrderedValue& alpha) {
  auto end = s.terms_.begin();
  while (end != s.terms_.end() && below(end->exponent, alpha)) ++end;
  return Series{s.space_, std::vector<Term>(s.terms_.begin(), end), min_value(s.truncation_, alpha)};
}

OrderedValue quotient_valuation(const Series& s, const OrderedValue& alpha) {
  if (!s.support_empty() && below(s.terms().front().exponent, alpha)) return OrderedValue{s.terms().front().exponent};
  if (s.truncation() >= alpha) return OrderedValue::infinity();
  throw IndeterminateValuation("class of " + to_string(s) + " modulo B_" + alpha.to_string() +
                               "(0) is not determined at this precision");
}

const Term& leading_term(const Series& s) {
  if (s.support_empty()) throw EmptySupport("leading term of a series with empty support");
  return s.terms().front();
}

}  // namespace hahn
