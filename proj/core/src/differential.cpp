#include "hahn/differential.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "text_util.hpp"

namespace hahn {

Obstruction::Obstruction(const GroupElement& g)
    : SectionUnavailable("obstruction at exponent " + g.to_string() + ": no monomial has derivative c*t^" +
                             g.to_string(),
                         g) {}

Ambiguous::Ambiguous(const GroupElement& g)
    : Error("ambiguous derivation: several exponents shift to " + g.to_string()) {}

TermwiseDerivation::TermwiseDerivation(SeriesSpace space, std::string name, CoefficientMap d, ShiftMap sigma,
                                       ShiftSolver solve, TruncationMap truncation)
    : space_(std::move(space)),
      name_(std::move(name)),
      d_(std::move(d)),
      sigma_(std::move(sigma)),
      solve_(std::move(solve)),
      truncation_(std::move(truncation)) {}

namespace {

void require_rank_one(const SeriesSpace& space, std::string_view what) {
  if (space.group().rank() != 1)
    throw std::invalid_argument(std::string(what) + " needs a rank-one value group, got " + space.group().name());
}

// d(g) = g read in the coefficient field; exponents whose denominator
// vanishes mod p have no image and act as zero.
TermwiseDerivation::CoefficientMap exponent_as_coefficient(const CoefficientField& k) {
  return [k](const GroupElement& g) -> Coefficient {
    try {
      return k.from_rational(g.scalar());
    } catch (const FieldError&) {
      return Coefficient{0};
    }
  };
}

}  // namespace

TermwiseDerivation TermwiseDerivation::ddt(const SeriesSpace& space) {
  require_rank_one(space, "ddt");
  auto d = exponent_as_coefficient(space.field());
  const GroupElement one = space.exponent(1);
  auto sigma = [one](const GroupElement& g) { return g - one; };
  auto solve = [d, one](const GroupElement& g) -> std::optional<GroupElement> {
    GroupElement pre = g + one;
    if (d(pre) == 0) return std::nullopt;
    return pre;
  };
  auto truncation = [one](const OrderedValue& t) {
    return t.is_infinite() ? t : OrderedValue{t.finite_value() - one};
  };
  return TermwiseDerivation{space, "ddt", d, sigma, solve, truncation};
}

TermwiseDerivation TermwiseDerivation::euler(const SeriesSpace& space) {
  require_rank_one(space, "euler");
  auto d = exponent_as_coefficient(space.field());
  auto sigma = [](const GroupElement& g) { return g; };
  auto solve = [d](const GroupElement& g) -> std::optional<GroupElement> {
    if (d(g) == 0) return std::nullopt;
    return g;
  };
  auto truncation = [](const OrderedValue& t) { return t; };
  return TermwiseDerivation{space, "euler", d, sigma, solve, truncation};
}

TermwiseDerivation TermwiseDerivation::from_tables(const SeriesSpace& space,
                                                   std::vector<std::pair<GroupElement, Coefficient>> d_table,
                                                   std::vector<std::pair<GroupElement, GroupElement>> sigma_table) {
  const CoefficientField& k = space.field();
  auto d_map = std::make_shared<std::map<GroupElement, Coefficient>>();
  for (auto& [g, c] : d_table) {
    if (!space.group().contains(g)) throw std::invalid_argument(g.to_string() + " is not in " + space.group().name());
    const Coefficient ck = k.from_rational(c);
    if (ck != 0) (*d_map)[g] = ck;
  }
  auto sigma_map = std::make_shared<std::map<GroupElement, GroupElement>>();
  for (auto& [g, h] : sigma_table) {
    if (!space.group().contains(g) || !space.group().contains(h))
      throw std::invalid_argument("sigma entry " + g.to_string() + "=" + h.to_string() + " is not in " +
                                  space.group().name());
    (*sigma_map)[g] = h;
  }
  auto inverse = std::make_shared<std::map<GroupElement, GroupElement>>();
  for (const auto& [g, c] : *d_map) {
    auto it = sigma_map->find(g);
    if (it == sigma_map->end()) throw std::invalid_argument("no sigma entry for exponent " + g.to_string());
    if (!inverse->emplace(it->second, g).second) throw Ambiguous(it->second);
  }
  auto d = [d_map](const GroupElement& g) {
    auto it = d_map->find(g);
    return it == d_map->end() ? Coefficient{0} : it->second;
  };
  // Off the table d vanishes, so σ there only matters formally.
  auto sigma = [sigma_map](const GroupElement& g) {
    auto it = sigma_map->find(g);
    return it == sigma_map->end() ? g : it->second;
  };
  auto solve = [inverse](const GroupElement& g) -> std::optional<GroupElement> {
    auto it = inverse->find(g);
    if (it == inverse->end()) return std::nullopt;
    return it->second;
  };
  auto truncation = [d_map, sigma_map](const OrderedValue& t) {
    OrderedValue lowest = OrderedValue::infinity();
    for (const auto& [g, c] : *d_map)
      if (!below(g, t)) lowest = min_value(lowest, OrderedValue{sigma_map->at(g)});
    return lowest;
  };
  return TermwiseDerivation{space, "table", d, sigma, solve, truncation};
}

namespace {

template <class Value, class ParseValue>
std::vector<std::pair<GroupElement, Value>> parse_table(std::string_view body, const ValueGroup& group,
                                                        ParseValue parse_value) {
  std::vector<std::pair<GroupElement, Value>> table;
  if (body.empty()) return table;
  for (auto entry : detail::split_top_level(body, ',')) {
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) throw ParseError("table entry '" + std::string(entry) + "' lacks '='");
    table.emplace_back(group.parse(entry.substr(0, eq)), parse_value(entry.substr(eq + 1)));
  }
  return table;
}

}  // namespace

TermwiseDerivation TermwiseDerivation::parse(std::string_view selector, const SeriesSpace& space) {
  if (selector == "ddt") return ddt(space);
  if (selector == "euler") return euler(space);
  const auto parts = detail::split_top_level(selector, ';');
  if (parts.size() != 2 || !parts[0].starts_with("d:") || !parts[1].starts_with("sigma:"))
    throw ParseError("unknown derivation '" + std::string(selector) +
                     "' (expected ddt, euler or d:<table>;sigma:<table>)");
  const ValueGroup& group = space.group();
  auto d = parse_table<Coefficient>(parts[0].substr(2), group, [](std::string_view v) { return parse_rational(v); });
  auto sigma = parse_table<GroupElement>(parts[1].substr(6), group, [&](std::string_view v) { return group.parse(v); });
  try {
    return from_tables(space, std::move(d), std::move(sigma));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad derivation table: ") + e.what());
  } catch (const FieldError& e) {
    throw ParseError(std::string("bad derivation table: ") + e.what());
  }
}

Series TermwiseDerivation::operator()(const Series& s) const {
  if (!(s.space() == space_)) throw std::invalid_argument("derivation applied to a series from another space");
  const CoefficientField& k = space_.field();
  std::vector<Term> image;
  image.reserve(s.size());
  for (const auto& t : s.terms()) {
    const Coefficient factor = d_(t.exponent);
    if (factor == 0) continue;
    image.push_back(Term{k.mul(t.coefficient, factor), sigma_(t.exponent)});
  }
  return space_.make(std::move(image), truncation_(s.truncation()));
}

DifferentialFieldSpec::DifferentialFieldSpec(TermwiseDerivation derivation) : derivation_(std::move(derivation)) {
  if (derivation_.coefficient_factor(space().group().zero()) != 0)
    throw std::invalid_argument("derivation " + derivation_.name() + " does not annihilate constants");
}

Series derive(const TermwiseDerivation& d, const Series& s) { return d(s); }

Series derive(const DifferentialFieldSpec& spec, const Series& s) { return spec.derivation()(s); }

bool has_no_constant_term(const Series& s) { return s.coefficient(s.space().group().zero()) == 0; }

CheckReport check_condition_7(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples) {
  CheckReport report{"condition_7"};
  const OrderedValue zero{spec.space().group().zero()};
  for (const auto& [a, b] : samples) {
    const OrderedValue va = valuation(a);
    const OrderedValue vb = valuation(b);
    if (va.is_infinite() || vb.is_infinite() || va == zero || vb == zero) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const OrderedValue vda = valuation(derive(spec, a));
    const OrderedValue vdb = valuation(derive(spec, b));
    if ((va <= vb) != (vda <= vdb))
      report.flag("a = " + to_string(a) + ", b = " + to_string(b) + ": va " + va.to_string() + ", vb " +
                  vb.to_string() + ", vDa " + vda.to_string() + ", vDb " + vdb.to_string());
  }
  return report;
}

CheckReport check_condition_6(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples) {
  CheckReport report{"condition_6"};
  const OrderedValue zero{spec.space().group().zero()};
  for (const auto& [a, b] : samples) {
    const OrderedValue va = valuation(a);
    const OrderedValue vb = valuation(b);
    if (!(va >= zero) || !(vb > zero) || vb.is_infinite()) {
      ++report.skipped;
      continue;
    }
    const Series da = derive(spec, a);
    const Series db = derive(spec, b);
    if (is_exact_zero(da) || is_exact_zero(db)) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const OrderedValue value = vb + valuation(da) + OrderedValue{-valuation(db).finite_value()};
    if (!(value > zero))
      report.flag("a = " + to_string(a) + ", b = " + to_string(b) + ": v(b*Da/Db) = " + value.to_string());
  }
  return report;
}

CheckReport check_leibniz(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples) {
  CheckReport report{"leibniz"};
  for (const auto& [a, b] : samples) {
    ++report.checked;
    const Series lhs = derive(spec, a * b);
    const Series rhs = a * derive(spec, b) + b * derive(spec, a);
    if (!(lhs == rhs))
      report.flag("D(ab) = " + to_string(lhs) + " but aDb + bDa = " + to_string(rhs) + " for a = " + to_string(a) +
                  ", b = " + to_string(b));
  }
  return report;
}

namespace {

Series integrate_monomial(const DifferentialFieldSpec& spec, const Term& term) {
  const TermwiseDerivation& d = spec.derivation();
  const auto pre = d.shift_preimage(term.exponent);
  if (!pre) throw Obstruction(term.exponent);
  const CoefficientField& k = spec.space().field();
  return spec.space().monomial(k.div(term.coefficient, d.coefficient_factor(*pre)), *pre);
}

}  // namespace

Series asymptotic_section(const DifferentialFieldSpec& spec, const Series& b) {
  return integrate_monomial(spec, leading_term(b));
}

IntegrationProblem integration_problem(const DifferentialFieldSpec& spec) {
  const TermwiseDerivation& d = spec.derivation();
  const GroupElement zero = spec.space().group().zero();
  Homomorphism<Series, Series> f{[d](const Series& a) { return d(a); }, spec.space().zero()};
  AsymptoticSection<Series, Series> section{[spec](const Series& b) { return asymptotic_section(spec, b); },
                                            has_no_constant_term};
  PhiMap phi{[d](const GroupElement& g) { return d.exponent_shift(g); },
             [d](const GroupElement& g) { return d.shift_preimage(g); },
             [zero](const GroupElement& g) { return g != zero; }};
  return IntegrationProblem{std::move(f), std::move(section), std::move(phi)};
}

SolveResult<Series> integrate(const DifferentialFieldSpec& spec, const Series& b, const OrderedValue& precision,
                              std::size_t max_iter) {
  const IntegrationProblem problem = integration_problem(spec);
  return solve(problem.f, problem.section, b, precision, max_iter);
}

Series termwise_integral_oracle(const DifferentialFieldSpec& spec, const Series& b) {
  if (!b.is_exact()) throw std::invalid_argument("termwise_integral_oracle needs an exact series");
  std::vector<Term> terms;
  terms.reserve(b.size());
  for (const auto& t : b.terms()) {
    const Series m = integrate_monomial(spec, t);
    terms.push_back(m.terms().front());
  }
  return spec.space().make(std::move(terms));
}

}  // namespace hahn
