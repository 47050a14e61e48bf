// Seeded property tests; each loop draws its cases from a fixed seed.
#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "hahn/differential.hpp"
#include "hahn/pseudo_direct.hpp"
#include "hahn/sampling.hpp"
#include "hahn/series.hpp"
#include "hahn/solver.hpp"
#include "hahn/ultrametric.hpp"
#include "oracle.hpp"

using namespace hahn;

namespace {

constexpr int kCases = 300;

const SeriesSpace space;
GroupElement e(std::int64_t g) { return GroupElement{Rational(g)}; }
OrderedValue fin(std::int64_t g) { return OrderedValue{e(g)}; }

Sampler::Shape window(std::int64_t lo, std::int64_t hi, std::size_t max_terms = 8) {
  Sampler::Shape shape;
  shape.lo = lo;
  shape.hi = hi;
  shape.max_terms = max_terms;
  return shape;
}

Series draw(Sampler& rng, const SeriesSpace& sp, std::int64_t lo = -10, std::int64_t hi = 10,
            std::size_t max_terms = 8) {
  Sampler::Shape shape = window(lo, hi, max_terms);
  shape.min_terms = 0;
  return rng.series(sp, shape);
}

std::vector<SeriesSpace> spaces() {
  return {SeriesSpace{},
          SeriesSpace{CoefficientField::prime(5), ValueGroup::integers()},
          SeriesSpace{CoefficientField::rationals(), ValueGroup::rationals()},
          SeriesSpace{CoefficientField::prime(3), ValueGroup::from_name("lex2")}};
}

}  // namespace

TEST(Property, OrderedGroupAxioms) {
  Sampler rng{1};
  for (const auto& sp : spaces()) {
    const ValueGroup& g = sp.group();
    for (int i = 0; i < kCases; ++i) {
      const GroupElement a = rng.exponent(g, -6, 6), b = rng.exponent(g, -6, 6), c = rng.exponent(g, -6, 6);
      ASSERT_EQ(g.compare(a, b), g.compare(g.add(a, c), g.add(b, c))) << g.name();
      ASSERT_EQ(g.add(a, b), g.add(b, a));
      ASSERT_EQ(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
      ASSERT_EQ(g.add(a, g.neg(a)), g.zero());
      ASSERT_EQ(g.compare(a, b) == std::strong_ordering::less, g.compare(b, a) == std::strong_ordering::greater);
      if (g.compare(a, b) != std::strong_ordering::greater && g.compare(b, c) != std::strong_ordering::greater) {
        ASSERT_NE(g.compare(a, c), std::strong_ordering::greater);
      }
      ASSERT_EQ(g.parse(a.to_string()), a);
    }
  }
}

TEST(Property, UltrametricLaw) {
  Sampler rng{2};
  for (const auto& sp : spaces()) {
    std::vector<std::pair<Series, Series>> pairs;
    for (int i = 0; i < kCases; ++i) pairs.emplace_back(draw(rng, sp), draw(rng, sp));
    const CheckReport report = check_ultrametric<Series>(pairs);
    EXPECT_TRUE(report.passed()) << sp.group().name() << ": " << (report.violations.empty() ? "" : report.violations[0]);
  }
}

TEST(Property, RingLaws) {
  Sampler rng{3};
  for (const auto& sp : spaces()) {
    for (int i = 0; i < kCases / 3; ++i) {
      const Series a = draw(rng, sp, -5, 5, 4), b = draw(rng, sp, -5, 5, 4), c = draw(rng, sp, -5, 5, 4);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a - a, sp.zero());
      if (!a.support_empty() && !b.support_empty()) {
        ASSERT_EQ(valuation(a * b), valuation(a) + valuation(b));
      }
    }
  }
}

TEST(Property, MultiplicationMatchesOracle) {
  Sampler rng{4};
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space), b = draw(rng, space);
    ASSERT_EQ(a * b, oracle::series_of(space, oracle::product(oracle::terms_of(a), oracle::terms_of(b))));
    ASSERT_EQ(a + b, oracle::series_of(space, oracle::plus(oracle::terms_of(a), oracle::terms_of(b))));
  }
}

TEST(Property, TruncatedProductAgreesWithExactProduct) {
  Sampler rng{5};
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space), b = draw(rng, space);
    if (a.support_empty() || b.support_empty()) continue;
    const OrderedValue ta = fin(rng.uniform(-10, 12)), tb = fin(rng.uniform(-10, 12));
    const Series ax = truncate(a, ta), bx = truncate(b, tb);
    if (ax.support_empty() || bx.support_empty()) continue;
    const Series p = ax * bx;
    // Every coefficient the product claims to know is the true one.
    ASSERT_EQ(truncate(a * b, p.truncation()), p);
  }
}

TEST(Property, TruncateIsHomomorphismWithBallKernel) {
  Sampler rng{6};
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space, -5, 5), b = draw(rng, space, -5, 5);
    const OrderedValue alpha = fin(rng.uniform(-5, 5));
    ASSERT_EQ(truncate(a + b, alpha), truncate(a, alpha) + truncate(b, alpha));
    ASSERT_EQ(truncate(a, alpha).support_empty(), ball_contains(Ball<Series>{space.zero(), alpha}, a));
  }
}

TEST(Property, TextAndJsonRoundTrip) {
  Sampler rng{7};
  for (const auto& sp : spaces()) {
    for (int i = 0; i < kCases; ++i) {
      Series a = draw(rng, sp);
      if (rng.chance(1, 3)) a = truncate(a, OrderedValue{rng.exponent(sp.group(), -10, 10)});
      ASSERT_EQ(sp.parse(to_string(a)), a) << to_string(a);
      ASSERT_EQ(sp.from_json(to_json(a)), a);
      ASSERT_EQ(sp.make({a.terms().begin(), a.terms().end()}, a.truncation()), a);
    }
  }
}

TEST(Property, DerivationsMatchOracle) {
  Sampler rng{8};
  const auto euler = TermwiseDerivation::euler(space);
  const auto ddt = TermwiseDerivation::ddt(space);
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space);
    const oracle::Terms ta = oracle::terms_of(a);
    ASSERT_EQ(euler(a), oracle::series_of(space, oracle::euler_derivative(ta)));
    ASSERT_EQ(ddt(a), oracle::series_of(space, oracle::ddt_derivative(ta)));
  }
}

TEST(Property, IntegrationMatchesOracle) {
  Sampler rng{9};
  const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
  const DifferentialFieldSpec ddt{TermwiseDerivation::ddt(space)};
  for (int i = 0; i < kCases; ++i) {
    const Series b = draw(rng, space);
    const oracle::Terms tb = oracle::terms_of(b);
    for (const auto* spec : {&euler, &ddt}) {
      const auto expected = spec == &euler ? oracle::euler_antiderivative(tb) : oracle::ddt_antiderivative(tb);
      if (!expected) {
        EXPECT_THROW(integrate(*spec, b), SectionFailure);
        continue;
      }
      const SolveResult<Series> r = integrate(*spec, b);
      ASSERT_EQ(r.solution, oracle::series_of(space, *expected));
      ASSERT_LE(r.iterations, b.size());
      ASSERT_TRUE(has_no_constant_term(r.solution));
      for (std::size_t k = 1; k < r.trace.size(); ++k) ASSERT_LT(r.trace[k - 1].residual_value, r.trace[k].residual_value);
    }
  }
}

TEST(Property, AsymptoticStep) {
  Sampler rng{10};
  const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
  Sampler::Shape shape = window(-10, 10);
  shape.allowed = [](const GroupElement& g) { return !g.is_zero(); };
  for (int i = 0; i < kCases; ++i) {
    const Series b = rng.series(space, shape);
    const Series s = asymptotic_section(euler, b);
    ASSERT_GT(valuation(b - derive(euler, s)), valuation(b));
    ASSERT_EQ(valuation(derive(euler, s)), valuation(b));
  }
}

TEST(Property, ParityDecompositionMatchesSplit) {
  Sampler rng{11};
  const SeriesSpace f5{CoefficientField::prime(5), ValueGroup::integers()};
  const std::vector<Subgroup> parity{Subgroup::even(), Subgroup::odd()};
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, f5);
    const auto [even, odd] = oracle::parity_split(oracle::terms_of(a));
    const SolveResult<ProductElement> r = decompose(parity, a);
    ASSERT_EQ(r.solution, (ProductElement{{oracle::series_of(f5, even), oracle::series_of(f5, odd)}}));
    ASSERT_EQ(sum_map(r.solution), a);
    ASSERT_LE(r.iterations, a.size());
  }
}

TEST(Property, SectionOutputsAreWitnesses) {
  Sampler rng{12};
  const std::vector<Subgroup> parts{Subgroup::residue(3, 0), Subgroup::residue(3, 1), Subgroup::residue(3, 2)};
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space);
    if (a.support_empty()) continue;
    const ProductElement t = pseudo_direct_section(parts, a);
    ASSERT_TRUE(check_pseudo_direct_witness(a, t));
    ASSERT_GE(valuation(sum_map(t)), min_valuation(t));
  }
}

TEST(Property, BallSubsetIsExtensional) {
  Sampler rng{13};
  for (int i = 0; i < kCases; ++i) {
    const Series c1 = draw(rng, space, -6, 6, 4), c2 = rng.chance(1, 2) ? c1 + draw(rng, space, -6, 6, 2) : draw(rng, space, -6, 6, 4);
    auto radius = [&]() { return rng.chance(1, 10) ? OrderedValue::infinity() : fin(rng.uniform(-6, 6)); };
    const OrderedValue r1 = radius(), r2 = radius();
    auto opt = [](const OrderedValue& r) {
      return r.is_infinite() ? std::nullopt
                             : std::optional<std::int64_t>(static_cast<std::int64_t>(boost::multiprecision::numerator(r.finite_value().scalar())));
    };
    const bool fast = ball_subset(Ball<Series>{c1, r1}, Ball<Series>{c2, r2});
    const bool slow = oracle::probe_ball_subset(oracle::terms_of(c1), opt(r1), oracle::terms_of(c2), opt(r2), -8, 8);
    ASSERT_EQ(fast, slow) << to_string(c1) << " " << r1.to_string() << " / " << to_string(c2) << " " << r2.to_string();
    // Intersecting balls are nested.
    const Ball<Series> b1{c1, r1}, b2{c2, r2};
    if (ball_contains(b1, c2) || ball_contains(b2, c1)) {
      ASSERT_TRUE(ball_subset(b1, b2) || ball_subset(b2, b1));
    }
  }
}

TEST(Property, ImageBallContainsImages) {
  Sampler rng{14};
  const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
  const IntegrationProblem p = integration_problem(euler);
  for (int i = 0; i < kCases; ++i) {
    const Series a = draw(rng, space);
    std::int64_t g = rng.uniform(-9, 9);
    if (g == 0) g = 1;
    const OrderedValue alpha = fin(g);
    const Series a2 = a + draw(rng, space, g, 10, 3);
    const Ball<Series> image = image_ball(p.f, p.phi, a, alpha);
    ASSERT_TRUE(ball_contains(image, p.f(a2)));
  }
}
