#include "hahn/instances.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "hahn/differential.hpp"
#include "hahn/errors.hpp"
#include "hahn/sampling.hpp"
#include "hahn/solver.hpp"

namespace hahn {

bool CheckSuite::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

std::vector<std::string> check_instance_names() {
  return {"euler", "ddt", "broken-a", "broken-b", "broken-c", "broken-fixture"};
}

namespace {

// k((G)) with w = c∘v, where c collapses the value interval [2, 3] to 2.
// c is monotone and fixes ∞, so w is again a valuation.
struct CoarseSeries {
  Series series;

  friend CoarseSeries operator+(const CoarseSeries& a, const CoarseSeries& b) { return {a.series + b.series}; }
  friend CoarseSeries operator-(const CoarseSeries& a, const CoarseSeries& b) { return {a.series - b.series}; }
  friend CoarseSeries operator-(const CoarseSeries& a) { return {-a.series}; }
  friend bool operator==(const CoarseSeries&, const CoarseSeries&) = default;
};

OrderedValue coarsen(const OrderedValue& v) {
  if (v.is_infinite() || v.finite_value().rank() != 1) return v;
  const Rational& g = v.finite_value().scalar();
  if (g >= 2 && g <= 3) return OrderedValue{GroupElement{Rational(2)}};
  return v;
}

OrderedValue valuation(const CoarseSeries& x) { return coarsen(valuation(x.series)); }
OrderedValue value_lower_bound(const CoarseSeries& x) { return coarsen(value_lower_bound(x.series)); }
bool is_exact_zero(const CoarseSeries& x) { return is_exact_zero(x.series); }
std::string to_string(const CoarseSeries& x) { return to_string(x.series); }

struct Samples {
  std::vector<Series> domain_s;
  std::vector<std::pair<Series, Series>> b_pairs;
  std::vector<Series> codomain;
  std::vector<std::pair<Series, Series>> s_pairs;
  std::vector<std::pair<Series, Series>> condition6;
  std::vector<std::pair<Series, Series>> condition7;
  std::vector<std::pair<Series, Series>> leibniz;
};

std::int64_t floor_of(const OrderedValue& v) {
  const Rational& q = v.finite_value()[0];
  Integer n = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
  if (n * boost::multiprecision::denominator(q) > boost::multiprecision::numerator(q)) n -= 1;
  return static_cast<std::int64_t>(n);
}

Samples draw_samples(const SeriesSpace& space, const CheckOptions& options,
                     const std::function<bool(const GroupElement&)>& codomain_allowed) {
  Sampler rng{options.seed};
  const std::int64_t w = options.window;
  const GroupElement zero = space.group().zero();
  Sampler::Shape no_constant{-w, w, 1, 8, [zero](const GroupElement& g) { return g != zero; }};
  Sampler::Shape any{-w, w, 1, 8, nullptr};
  Sampler::Shape image{-w, w, 1, 8, codomain_allowed};
  Samples out;
  const std::size_t n = options.samples;
  for (std::size_t i = 0; i < n; ++i) out.domain_s.push_back(rng.series(space, no_constant));
  for (std::size_t i = 0; i < n; ++i) {
    Series s = rng.series(space, no_constant);
    // Three draws in four satisfy the antecedent va >= vs by construction.
    Sampler::Shape above = any;
    if (rng.chance(3, 4)) {
      const OrderedValue vs = valuation(s);
      above.lo = std::min<std::int64_t>(floor_of(vs) + 1, w);
      above.allowed = [vs](const GroupElement& g) { return OrderedValue{g} >= vs; };
    }
    out.b_pairs.emplace_back(rng.series(space, above), std::move(s));
  }
  for (std::size_t i = 0; i < n; ++i) out.codomain.push_back(rng.series(space, image));
  for (std::size_t i = 0; i < n; ++i) {
    Series s = rng.series(space, no_constant);
    Series t = rng.chance(1, 10) ? s : rng.series(space, no_constant);
    out.s_pairs.emplace_back(std::move(s), std::move(t));
  }
  Sampler::Shape nonnegative{0, w, 1, 8, nullptr};
  Sampler::Shape positive{1, w, 1, 8, nullptr};
  for (std::size_t i = 0; i < n; ++i) {
    Series a = rng.series(space, nonnegative);
    out.condition6.emplace_back(std::move(a), rng.series(space, positive));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Series a = rng.series(space, any);
    out.condition7.emplace_back(std::move(a), rng.series(space, any));
  }
  Sampler::Shape small{-w, w, 1, 4, nullptr};
  for (std::size_t i = 0; i < n; ++i) {
    Series a = rng.series(space, small);
    out.leibniz.emplace_back(std::move(a), rng.series(space, small));
  }
  return out;
}

template <class B>
std::vector<CheckReport> hypothesis_reports(const Homomorphism<Series, B>& f,
                                            const AsymptoticSection<Series, B>& section, const PhiMap& phi,
                                            const Samples& samples, const std::function<B(const Series&)>& lift) {
  std::vector<B> codomain;
  codomain.reserve(samples.codomain.size());
  for (const auto& b : samples.codomain) codomain.push_back(lift(b));
  std::vector<CheckReport> reports;
  reports.push_back(check_assumption_a(f, phi, std::span<const Series>(samples.domain_s)));
  reports.push_back(check_assumption_b(f, std::span<const std::pair<Series, Series>>(samples.b_pairs)));
  reports.push_back(check_assumption_c(f, section, std::span<const B>(codomain)));
  return reports;
}

CheckSuite derivation_checks(std::string_view name, const DifferentialFieldSpec& spec, const CheckOptions& options,
                             const std::function<bool(const GroupElement&)>& codomain_allowed) {
  const Samples samples = draw_samples(spec.space(), options, codomain_allowed);
  const IntegrationProblem problem = integration_problem(spec);
  CheckSuite suite{std::string(name)};
  suite.reports = hypothesis_reports<Series>(problem.f, problem.section, problem.phi, samples,
                                             [](const Series& b) { return b; });
  suite.reports.push_back(
      verify_section_injectivity(problem.f, std::span<const std::pair<Series, Series>>(samples.s_pairs)));
  std::vector<OrderedValue> domain_values;
  for (const auto& s : samples.domain_s) domain_values.push_back(valuation(s));
  std::vector<OrderedValue> codomain_values;
  for (const auto& b : samples.codomain) codomain_values.push_back(valuation(b));
  suite.reports.push_back(check_phi_roundtrip(problem.phi, domain_values, codomain_values));
  suite.reports.push_back(check_condition_6(spec, samples.condition6));
  suite.reports.push_back(check_condition_7(spec, samples.condition7));
  suite.reports.push_back(check_leibniz(spec, samples.leibniz));
  return suite;
}

// Euler antiderivative of every term of b whose coarse value is w(b).
Series coarse_section(const DifferentialFieldSpec& euler, const Series& b) {
  const OrderedValue level = coarsen(valuation(b));
  std::vector<Term> block;
  for (const auto& t : b.terms()) {
    if (coarsen(OrderedValue{t.exponent}) != level) break;
    block.push_back(t);
  }
  return termwise_integral_oracle(euler, b.space().make(std::move(block)));
}

}  // namespace

CheckSuite run_instance_checks(std::string_view instance, const SeriesSpace& space, const CheckOptions& options) {
  const GroupElement zero = space.group().zero();
  auto not_zero = [zero](const GroupElement& g) { return g != zero; };
  if (instance == "euler") {
    return derivation_checks(instance, DifferentialFieldSpec{TermwiseDerivation::euler(space)}, options, not_zero);
  }
  if (instance == "ddt") {
    const GroupElement minus_one = -space.exponent(1);
    return derivation_checks(instance, DifferentialFieldSpec{TermwiseDerivation::ddt(space)}, options,
                             [minus_one](const GroupElement& g) { return g != minus_one; });
  }
  if (instance == "broken-a" || instance == "broken-b" || instance == "broken-c" || instance == "broken-fixture") {
    const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
    const IntegrationProblem base = integration_problem(euler);
    const Samples samples = draw_samples(space, options, not_zero);
    CheckSuite suite{std::string(instance)};
    if (instance == "broken-a") {
      Homomorphism<Series, CoarseSeries> f{[d = euler.derivation()](const Series& a) { return CoarseSeries{d(a)}; },
                                           space.zero()};
      AsymptoticSection<Series, CoarseSeries> section{
          [euler](const CoarseSeries& b) { return coarse_section(euler, b.series); }, has_no_constant_term};
      PhiMap phi{[](const GroupElement& g) { return coarsen(OrderedValue{g}).finite_value(); },
                 [](const GroupElement& g) -> std::optional<GroupElement> { return g; }, not_zero};
      suite.reports = hypothesis_reports<CoarseSeries>(f, section, phi, samples,
                                                       [](const Series& b) { return CoarseSeries{b}; });
    } else if (instance == "broken-c") {
      const CoefficientField k = space.field();
      AsymptoticSection<Series, Series> section{
          [euler, k](const Series& b) { return scalar_mul(k.from_rational(2), asymptotic_section(euler, b)); },
          has_no_constant_term};
      suite.reports = hypothesis_reports<Series>(base.f, section, base.phi, samples, [](const Series& b) { return b; });
    } else {
      const GroupElement far = space.exponent(-(options.window + 5));
      Homomorphism<Series, Series> f{
          [d = euler.derivation(), zero, far](const Series& a) {
            return d(a) + a.space().monomial(a.coefficient(zero), far);
          },
          space.zero()};
      suite.reports = hypothesis_reports<Series>(f, base.section, base.phi, samples, [](const Series& b) { return b; });
    }
    return suite;
  }
  throw ParseError("unknown check instance '" + std::string(instance) + "'");
}

}  // namespace hahn
