#include <gtest/gtest.h>

#include <vector>

#include "hahn/errors.hpp"
#include "hahn/pseudo_direct.hpp"

using namespace hahn;

namespace {

const SeriesSpace space;
const SeriesSpace f5{CoefficientField::prime(5), ValueGroup::integers()};
Series s(std::string_view text) { return space.parse(text); }
GroupElement e(std::int64_t g) { return GroupElement{Rational(g)}; }
OrderedValue fin(std::int64_t g) { return OrderedValue{e(g)}; }
ProductElement pair(std::string_view a, std::string_view b) { return ProductElement{{s(a), s(b)}}; }

const std::vector<Subgroup> parity{Subgroup::even(), Subgroup::odd()};

}  // namespace

TEST(MinValuation, Examples) {
  EXPECT_EQ(min_valuation(pair("t^2", "t^5")), fin(2));
  EXPECT_TRUE(min_valuation(pair("0", "0")).is_infinite());
  EXPECT_EQ(min_valuation(pair("t^-1", "0")), fin(-1));
}

TEST(SumMap, Examples) {
  EXPECT_EQ(sum_map(pair("t^2", "t^3")), s("t^2 + t^3"));
  EXPECT_EQ(sum_map(pair("t", "-1*t")), s("0"));
  EXPECT_EQ(sum_map(ProductElement::zero(space, 3)), s("0"));
}

TEST(ProductElement, GroupOperations) {
  const ProductElement a = pair("t", "t^2");
  const ProductElement b = pair("-1*t", "1");
  EXPECT_EQ(a + b, pair("0", "1 + t^2"));
  EXPECT_EQ(a - a, ProductElement::zero(space, 2));
  EXPECT_EQ(-a, pair("-1*t", "-1*t^2"));
  EXPECT_EQ(to_string(a), "(t^1, t^2)");
  EXPECT_TRUE(is_exact_zero(ProductElement::zero(space, 2)));
}

TEST(Section, LeadingTermToLowestIndex) {
  EXPECT_EQ(pseudo_direct_section(parity, s("t^2 + t^3")), pair("t^2", "0"));
  const std::vector<Subgroup> overlap{Subgroup::residue(2, 0), Subgroup::residue(3, 0)};
  EXPECT_EQ(pseudo_direct_section(overlap, s("t^6 + t^7")), pair("t^6", "0"));
  EXPECT_EQ(pseudo_direct_section(overlap, s("t^3 + t^7")), pair("0", "t^3"));
}

TEST(Section, RankOneCounterexample) {
  const std::vector<Subgroup> lines{Subgroup::span(s("1 + t")), Subgroup::span(s("1"))};
  try {
    pseudo_direct_section(lines, s("t"));
    FAIL() << "expected NotPseudoDirect";
  } catch (const NotPseudoDirect& err) {
    ASSERT_TRUE(err.exponent());
    EXPECT_EQ(*err.exponent(), e(1));
  }
}

TEST(Section, UncoveredExponent) {
  const std::vector<Subgroup> evens{Subgroup::even()};
  EXPECT_THROW(pseudo_direct_section(evens, s("t^3")), NotPseudoDirect);
}

TEST(Decompose, ParityOverF5) {
  const SolveResult<ProductElement> r = decompose(parity, f5.parse("t^-2 + t + t^4"));
  EXPECT_EQ(r.solution, (ProductElement{{f5.parse("t^-2 + t^4"), f5.parse("t")}}));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.iterations, 3u);
}

TEST(Decompose, Zero) {
  const SolveResult<ProductElement> r = decompose(parity, s("0"));
  EXPECT_EQ(r.solution, ProductElement::zero(space, 2));
  EXPECT_EQ(r.iterations, 0u);
}

TEST(Decompose, RankOneCounterexampleFails) {
  const std::vector<Subgroup> lines{Subgroup::span(s("1 + t")), Subgroup::span(s("1"))};
  EXPECT_THROW(decompose(lines, s("t")), SectionFailure);
}

TEST(Decompose, SpanComponent) {
  const std::vector<Subgroup> parts{Subgroup::span(s("1 + t")), Subgroup::odd()};
  const SolveResult<ProductElement> r = decompose(parts, s("2 + t^3"));
  EXPECT_EQ(r.solution, pair("2 + 2*t", "-2*t + t^3"));
  EXPECT_TRUE(parts[0].contains(r.solution[0]));
  EXPECT_TRUE(parts[1].contains(r.solution[1]));
}

TEST(Decompose, Precision) {
  const SolveResult<ProductElement> r = decompose(parity, s("t + t^2 + t^9"), fin(5));
  EXPECT_EQ(r.solution, pair("t^2", "t"));
  EXPECT_FALSE(r.exact);
}

TEST(Witness, Examples) {
  EXPECT_TRUE(check_pseudo_direct_witness(s("t^2 + t^3"), pair("t^2", "0")));
  EXPECT_FALSE(check_pseudo_direct_witness(s("t^2 + t^3"), pair("0", "t^3")));
  EXPECT_FALSE(check_pseudo_direct_witness(s("t"), pair("0", "0")));
  // v(sum) = 1 > min = 0: the first condition fails.
  EXPECT_FALSE(check_pseudo_direct_witness(s("t"), pair("1 + t", "-1")));
}

TEST(ProductNest, Intersections) {
  const std::vector<Nest<Series>> singletons{Nest<Series>{{{s("t"), OrderedValue::infinity()}}},
                                             Nest<Series>{{{s("t^2"), OrderedValue::infinity()}}}};
  EXPECT_EQ(product_nest_intersect(space, singletons), pair("t", "t^2"));
  const std::vector<Nest<Series>> empty(2);
  EXPECT_EQ(product_nest_intersect(space, empty), ProductElement::zero(space, 2));
}

TEST(Subgroup, Parse) {
  EXPECT_TRUE(Subgroup::parse("even", space).contains(s("1 + t^-2")));
  EXPECT_FALSE(Subgroup::parse("odd", space).contains(s("1 + t")));
  EXPECT_TRUE(Subgroup::parse("mod:3:1", space).contains(s("t^-2 + t^4")));
  EXPECT_EQ(Subgroup::parse("mod:3:-2", space).name(), "mod:3:1");
  const Subgroup set = Subgroup::parse("set:{-1,4}", space);
  EXPECT_TRUE(set.contains(s("t^-1 + 3*t^4")));
  EXPECT_FALSE(set.contains(s("t")));
  const Subgroup line = Subgroup::parse("span:1 + t", space);
  EXPECT_TRUE(line.is_span());
  EXPECT_TRUE(line.contains(s("3 + 3*t")));
  EXPECT_FALSE(line.contains(s("3 + t")));
  for (const char* bad : {"", "evens", "mod:0:1", "mod:2", "mod:1/2:0", "set:1,2", "span:0", "span:t^"}) {
    EXPECT_THROW(Subgroup::parse(bad, space), ParseError) << bad;
  }
}
