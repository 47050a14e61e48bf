#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "hahn/differential.hpp"
#include "hahn/errors.hpp"

using namespace hahn;

namespace {

const SeriesSpace space;
Series s(std::string_view text) { return space.parse(text); }
GroupElement e(std::int64_t g) { return GroupElement{Rational(g)}; }
OrderedValue fin(std::int64_t g) { return OrderedValue{e(g)}; }

const DifferentialFieldSpec euler{TermwiseDerivation::euler(space)};
const DifferentialFieldSpec ddt{TermwiseDerivation::ddt(space)};

using Pairs = std::vector<std::pair<Series, Series>>;

}  // namespace

TEST(Derive, Examples) {
  EXPECT_EQ(derive(ddt, s("t^3")), s("3*t^2"));
  EXPECT_EQ(derive(euler, s("3*t^-2 + t^5")), s("-6*t^-2 + 5*t^5"));
  EXPECT_EQ(derive(ddt, s("0")), s("0"));
  EXPECT_EQ(derive(euler, s("0")), s("0"));
  EXPECT_EQ(derive(ddt, s("7 + t^-1")), s("-1*t^-2"));
}

TEST(Derive, Truncation) {
  EXPECT_EQ(derive(ddt, s("t + O(5)")), s("1 + O(4)"));
  EXPECT_EQ(derive(euler, s("t + O(5)")), s("t + O(5)"));
}

TEST(Derive, PrimeCharacteristic) {
  const SeriesSpace f5{CoefficientField::prime(5), ValueGroup::integers()};
  const auto d = TermwiseDerivation::ddt(f5);
  EXPECT_EQ(d(f5.parse("t^4 + t^5 + t^-3")), f5.parse("4*t^3 + 2*t^-4"));
}

TEST(Derive, RationalExponents) {
  const SeriesSpace puiseux{CoefficientField::rationals(), ValueGroup::rationals()};
  const auto d = TermwiseDerivation::ddt(puiseux);
  EXPECT_EQ(d(puiseux.parse("t^1/2")), puiseux.parse("1/2*t^-1/2"));
}

TEST(Derive, RankOneOnly) {
  const SeriesSpace lex{CoefficientField::rationals(), ValueGroup::from_name("lex2")};
  EXPECT_THROW(TermwiseDerivation::euler(lex), std::invalid_argument);
}

TEST(Condition7, Examples) {
  EXPECT_TRUE(check_condition_7(ddt, Pairs{{s("t^2"), s("t^5")}}).passed());
  EXPECT_TRUE(check_condition_7(euler, Pairs{{s("t^-3"), s("t^4")}}).passed());
}

TEST(Condition7, AdversarialDerivationFlagged) {
  // d(2) = 0 while d(3) ≠ 0.
  const DifferentialFieldSpec broken{
      TermwiseDerivation::from_tables(space, {{e(3), 3}, {e(9), 9}}, {{e(3), e(3)}, {e(9), e(9)}})};
  const CheckReport report = check_condition_7(broken, Pairs{{s("t^2 + t^9"), s("t^3")}});
  EXPECT_EQ(report.flagged, 1u);
}

TEST(Condition6, Examples) {
  const CheckReport a = check_condition_6(euler, Pairs{{s("1 + t"), s("t^2")}});
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.checked, 1u);
  const CheckReport b = check_condition_6(euler, Pairs{{s("5"), s("t")}});
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.skipped, 1u);
  EXPECT_TRUE(check_condition_6(ddt, Pairs{{s("t"), s("t")}}).passed());
}

TEST(Condition6, ViolationFlagged) {
  // σ pushes t^1 far below t^2: vb + vDa - vDb = 2 + (-5) - 2 < 0.
  const DifferentialFieldSpec broken{
      TermwiseDerivation::from_tables(space, {{e(1), 1}, {e(2), 1}}, {{e(1), e(-5)}, {e(2), e(2)}})};
  EXPECT_FALSE(check_condition_6(broken, Pairs{{s("t"), s("t^2")}}).passed());
}

TEST(Leibniz, BuiltinsSatisfyProductRule) {
  const Pairs pairs{{s("t^2 + 3"), s("t^-1 + 2*t")}, {s("5"), s("t^4")}, {s("0"), s("t")}};
  EXPECT_TRUE(check_leibniz(ddt, pairs).passed());
  EXPECT_TRUE(check_leibniz(euler, pairs).passed());
}

TEST(Leibniz, TableDerivationMayFail) {
  const DifferentialFieldSpec table{TermwiseDerivation::from_tables(space, {{e(1), 1}}, {{e(1), e(1)}})};
  EXPECT_FALSE(check_leibniz(table, Pairs{{s("t"), s("t")}}).passed());
}

TEST(AsymptoticSection, Examples) {
  const Series s1 = asymptotic_section(ddt, s("3*t^2 + t^5"));
  EXPECT_EQ(s1, s("t^3"));
  EXPECT_EQ(valuation(s("3*t^2 + t^5") - derive(ddt, s1)), fin(5));
  EXPECT_EQ(asymptotic_section(euler, s("4*t^2")), s("2*t^2"));
  try {
    asymptotic_section(ddt, s("t^-1"));
    FAIL() << "expected Obstruction";
  } catch (const Obstruction& err) {
    ASSERT_TRUE(err.exponent());
    EXPECT_EQ(*err.exponent(), e(-1));
  }
  EXPECT_THROW(asymptotic_section(euler, s("2 + t")), Obstruction);
}

TEST(Integrate, Examples) {
  const SolveResult<Series> a = integrate(ddt, s("3*t^2 + t^5"));
  EXPECT_EQ(a.solution, s("t^3 + 1/6*t^6"));
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.iterations, 2u);
  const SolveResult<Series> b = integrate(ddt, s("0"));
  EXPECT_TRUE(is_exact_zero(b.solution));
  EXPECT_EQ(integrate(euler, s("t^-1 + 2*t^3")).solution, s("-1*t^-1 + 2/3*t^3"));
}

TEST(Integrate, ObstructionSurfacesAsSectionFailure) {
  try {
    integrate(ddt, s("t^-3 + t^-1 + t"));
    FAIL() << "expected SectionFailure";
  } catch (const SectionFailure& err) {
    EXPECT_EQ(err.iterations(), 1u);
    ASSERT_TRUE(err.exponent());
    EXPECT_EQ(*err.exponent(), e(-1));
  }
}

TEST(Integrate, TruncatedInputToItsPrecision) {
  const SolveResult<Series> r = integrate(ddt, s("2*t + O(4)"), fin(4));
  EXPECT_EQ(r.solution, s("t^2"));
  EXPECT_FALSE(r.exact);
}

TEST(Integrate, PrimeFieldObstructionAtMultiplesOfP) {
  const SeriesSpace f5{CoefficientField::prime(5), ValueGroup::integers()};
  const DifferentialFieldSpec d{TermwiseDerivation::ddt(f5)};
  EXPECT_EQ(integrate(d, f5.parse("t^3")).solution, f5.parse("4*t^4"));
  EXPECT_THROW(integrate(d, f5.parse("t^4")), SectionFailure);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(termwise_integral_oracle(ddt, s("3*t^2 + t^5")), s("t^3 + 1/6*t^6"));
  EXPECT_EQ(termwise_integral_oracle(euler, s("5*t^-2")), s("-5/2*t^-2"));
  EXPECT_EQ(termwise_integral_oracle(euler, s("0")), s("0"));
  EXPECT_THROW(termwise_integral_oracle(ddt, s("t^2 + t^-1")), Obstruction);
}

TEST(TableDerivation, Validation) {
  EXPECT_THROW(TermwiseDerivation::from_tables(space, {{e(1), 1}, {e(2), 1}}, {{e(1), e(0)}, {e(2), e(0)}}),
               Ambiguous);
  EXPECT_THROW(TermwiseDerivation::from_tables(space, {{e(1), 1}}, {}), std::invalid_argument);
  EXPECT_THROW(DifferentialFieldSpec(TermwiseDerivation::from_tables(space, {{e(0), 1}}, {{e(0), e(0)}})),
               std::invalid_argument);
}

TEST(TableDerivation, Parse) {
  const auto d = TermwiseDerivation::parse("d:1=2,3=1/3;sigma:1=-1,3=4", space);
  EXPECT_EQ(d(s("t + t^2 + t^3 + 9")), s("2*t^-1 + 1/3*t^4"));
  EXPECT_EQ(d.shift_preimage(e(4)), std::optional<GroupElement>(e(3)));
  EXPECT_FALSE(d.shift_preimage(e(2)).has_value());
  EXPECT_EQ(d(s("t + O(2)")), s("2*t^-1 + O(4)"));
  const DifferentialFieldSpec spec{d};
  EXPECT_EQ(integrate(spec, s("t^-1 + t^4")).solution, s("1/2*t + 3*t^3"));
  EXPECT_THROW(integrate(spec, s("t^2")), SectionFailure);
  for (const char* bad : {"", "dd", "d:1=1", "d:1;sigma:1=1", "d:1=1;sigma:"}) {
    EXPECT_THROW(TermwiseDerivation::parse(bad, space), ParseError) << bad;
  }
  EXPECT_THROW(TermwiseDerivation::parse("d:1=1,2=1;sigma:1=0,2=0", space), Ambiguous);
}
