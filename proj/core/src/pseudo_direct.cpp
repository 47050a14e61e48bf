#include "hahn/pseudo_direct.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace hahn {

namespace {

// Integral rank-one exponent, as an integer.
std::optional<Integer> integral_scalar(const GroupElement& g) {
  if (g.rank() != 1 || boost::multiprecision::denominator(g.scalar()) != 1) return std::nullopt;
  return boost::multiprecision::numerator(g.scalar());
}

}  // namespace

Subgroup::Subgroup(std::string name, Pattern pattern, std::optional<Series> generator)
    : name_(std::move(name)), pattern_(std::move(pattern)), generator_(std::move(generator)) {}

Subgroup Subgroup::support(std::string name, Pattern pattern) {
  return Subgroup{std::move(name), std::move(pattern), std::nullopt};
}

Subgroup Subgroup::even() {
  return support("even", [](const GroupElement& g) {
    const auto n = integral_scalar(g);
    return n && *n % 2 == 0;
  });
}

Subgroup Subgroup::odd() {
  return support("odd", [](const GroupElement& g) {
    const auto n = integral_scalar(g);
    return n && *n % 2 != 0;
  });
}

Subgroup Subgroup::residue(std::int64_t modulus, std::int64_t remainder) {
  if (modulus <= 0) throw std::invalid_argument("residue subgroup needs a positive modulus");
  const std::int64_t r = ((remainder % modulus) + modulus) % modulus;
  return support("mod:" + std::to_string(modulus) + ":" + std::to_string(r), [modulus, r](const GroupElement& g) {
    const auto n = integral_scalar(g);
    if (!n) return false;
    Integer m = *n % modulus;
    if (m < 0) m += modulus;
    return m == r;
  });
}

Subgroup Subgroup::exponent_set(std::vector<GroupElement> exponents) {
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::string name = "set:{";
  for (std::size_t i = 0; i < exponents.size(); ++i) name += (i ? "," : "") + exponents[i].to_string();
  name += "}";
  return support(std::move(name), [exponents = std::move(exponents)](const GroupElement& g) {
    return std::binary_search(exponents.begin(), exponents.end(), g);
  });
}

Subgroup Subgroup::span(Series generator) {
  if (generator.support_empty()) throw std::invalid_argument("span of zero");
  std::string name = "span:" + to_string(generator);
  return Subgroup{std::move(name), nullptr, std::move(generator)};
}

Subgroup Subgroup::parse(std::string_view text, const SeriesSpace& space) {
  if (text == "even") return even();
  if (text == "odd") return odd();
  try {
    if (text.starts_with("mod:")) {
      const auto parts = detail::split_top_level(text.substr(4), ':');
      if (parts.size() != 2) throw ParseError("expected mod:<k>:<r>");
      const Rational k = parse_rational(parts[0]);
      const Rational r = parse_rational(parts[1]);
      if (boost::multiprecision::denominator(k) != 1 || boost::multiprecision::denominator(r) != 1)
        throw ParseError("mod pattern needs integers");
      return residue(static_cast<std::int64_t>(boost::multiprecision::numerator(k)),
                     static_cast<std::int64_t>(boost::multiprecision::numerator(r)));
    }
    if (text.starts_with("set:")) {
      std::string_view body = text.substr(4);
      if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw ParseError("expected set:{...}");
      body = body.substr(1, body.size() - 2);
      std::vector<GroupElement> exponents;
      if (!body.empty())
        for (auto item : detail::split_top_level(body, ',')) exponents.push_back(space.group().parse(item));
      return exponent_set(std::move(exponents));
    }
    if (text.starts_with("span:")) return span(space.parse(text.substr(5)));
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad subgroup '" + std::string(text) + "': " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("bad subgroup '" + std::string(text) + "': " + e.what());
  }
  throw ParseError("unknown subgroup pattern '" + std::string(text) + "' (expected even, odd, mod:k:r, set:{...})");
}

bool Subgroup::contains(const Series& a) const {
  if (!generator_) {
    return std::all_of(a.terms().begin(), a.terms().end(), [&](const Term& t) { return pattern_(t.exponent); });
  }
  if (a.support_empty()) return true;
  const CoefficientField& k = a.space().field();
  const Coefficient c = k.div(leading_term(a).coefficient, leading_term(*generator_).coefficient);
  return truncate(scalar_mul(c, *generator_), a.truncation()) == a;
}

std::optional<Series> Subgroup::cover_leading_term(const Series& a) const {
  const Term& lead = leading_term(a);
  if (!generator_) {
    if (!pattern_(lead.exponent)) return std::nullopt;
    return a.space().monomial(lead.coefficient, lead.exponent);
  }
  const Term& glead = leading_term(*generator_);
  if (glead.exponent != lead.exponent) return std::nullopt;
  const CoefficientField& k = a.space().field();
  return scalar_mul(k.div(lead.coefficient, glead.coefficient), *generator_);
}

ProductElement::ProductElement(std::vector<Series> components) : components_(std::move(components)) {
  for (std::size_t i = 1; i < components_.size(); ++i)
    if (!(components_[i].space() == components_[0].space()))
      throw std::invalid_argument("product components from different spaces");
}

ProductElement ProductElement::zero(const SeriesSpace& space, std::size_t n) {
  return ProductElement{std::vector<Series>(n, space.zero())};
}

namespace {

void require_same_arity(const ProductElement& a, const ProductElement& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("product arity mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

}  // namespace

ProductElement operator+(const ProductElement& a, const ProductElement& b) {
  require_same_arity(a, b);
  std::vector<Series> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return ProductElement{std::move(out)};
}

ProductElement operator-(const ProductElement& a, const ProductElement& b) {
  require_same_arity(a, b);
  std::vector<Series> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return ProductElement{std::move(out)};
}

ProductElement operator-(const ProductElement& a) {
  std::vector<Series> out;
  out.reserve(a.size());
  for (const auto& c : a.components()) out.push_back(-c);
  return ProductElement{std::move(out)};
}

OrderedValue min_valuation(const ProductElement& t) {
  OrderedValue v = OrderedValue::infinity();
  for (const auto& c : t.components()) v = min_value(v, valuation(c));
  return v;
}

OrderedValue valuation(const ProductElement& t) { return min_valuation(t); }

OrderedValue value_lower_bound(const ProductElement& t) {
  OrderedValue v = OrderedValue::infinity();
  for (const auto& c : t.components()) v = min_value(v, value_lower_bound(c));
  return v;
}

bool is_exact_zero(const ProductElement& t) {
  return std::all_of(t.components().begin(), t.components().end(),
                     [](const Series& c) { return is_exact_zero(c); });
}

std::string to_string(const ProductElement& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += to_string(t[i]);
  }
  return out + ")";
}

Series sum_map(const ProductElement& t) {
  if (t.size() == 0) throw std::invalid_argument("sum_map of an empty tuple");
  Series sum = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) sum = sum + t[i];
  return sum;
}

ProductElement pseudo_direct_section(std::span<const Subgroup> subgroups, const Series& a) {
  const OrderedValue va = valuation(a);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto cover = subgroups[i].cover_leading_term(a);
    if (!cover) continue;
    std::vector<Series> components(subgroups.size(), a.space().zero());
    components[i] = std::move(*cover);
    ProductElement witness{std::move(components)};
    if (check_pseudo_direct_witness(a, witness)) return witness;
  }
  throw NotPseudoDirect("no subgroup absorbs the leading term " + to_string(a.space().make({leading_term(a)})) +
                            " of " + to_string(a),
                        va.finite_value());
}

bool check_pseudo_direct_witness(const Series& a, const ProductElement& t) {
  const Series sum = sum_map(t);
  if (valuation(sum) != min_valuation(t)) return false;
  return value_lower_bound(a - sum) > valuation(a);
}

DecompositionProblem decomposition_problem(std::vector<Subgroup> subgroups, const SeriesSpace& space) {
  const std::size_t n = subgroups.size();
  if (n == 0) throw std::invalid_argument("decomposition needs at least one subgroup");
  Homomorphism<ProductElement, Series> f{[](const ProductElement& t) { return sum_map(t); },
                                         ProductElement::zero(space, n)};
  AsymptoticSection<ProductElement, Series> section{
      [subgroups = std::move(subgroups)](const Series& a) { return pseudo_direct_section(subgroups, a); },
      [](const ProductElement& t) { return valuation(sum_map(t)) == min_valuation(t); }};
  return DecompositionProblem{std::move(f), std::move(section), PhiMap::identity()};
}

SolveResult<ProductElement> decompose(std::span<const Subgroup> subgroups, const Series& a,
                                      const OrderedValue& precision, std::size_t max_iter) {
  const DecompositionProblem problem =
      decomposition_problem(std::vector<Subgroup>(subgroups.begin(), subgroups.end()), a.space());
  return solve(problem.f, problem.section, a, precision, max_iter);
}

ProductElement product_nest_intersect(const SeriesSpace& space, std::span<const Nest<Series>> nests) {
  std::vector<Series> components;
  components.reserve(nests.size());
  for (const auto& nest : nests) components.push_back(intersect_finite_nest(nest).value_or(space.zero()));
  return ProductElement{std::move(components)};
}

}  // namespace hahn
