#ifndef HAHN_DIFFERENTIAL_HPP
#define HAHN_DIFFERENTIAL_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hahn/report.hpp"
#include "hahn/series.hpp"
#include "hahn/solver.hpp"

namespace hahn {

/// No monomial integrates to c*t^g (e.g. t^-1 under d/dt).
class Obstruction : public SectionUnavailable {
 public:
  explicit Obstruction(const GroupElement& g);
};

/// σ(g') = g has several admissible solutions.
class Ambiguous : public Error {
 public:
  explicit Ambiguous(const GroupElement& g);
};

/// Additive derivation acting on monomials by c*t^g ↦ (c*d(g)) t^σ(g).
class TermwiseDerivation {
 public:
  using CoefficientMap = std::function<Coefficient(const GroupElement&)>;
  using ShiftMap = std::function<GroupElement(const GroupElement&)>;
  using ShiftSolver = std::function<std::optional<GroupElement>(const GroupElement&)>;
  using TruncationMap = std::function<OrderedValue(const OrderedValue&)>;

  /// d/dt: d(g) = g, σ(g) = g - 1. Needs a rank-one value group.
  static TermwiseDerivation ddt(const SeriesSpace& space);
  /// t*d/dt: d(g) = g, σ(g) = g.
  static TermwiseDerivation euler(const SeriesSpace& space);
  /// d and σ from finite tables; d vanishes off the table. Every g with
  /// d(g) ≠ 0 needs a σ entry. Throws Ambiguous if σ is not injective on
  /// {d ≠ 0}.
  static TermwiseDerivation from_tables(const SeriesSpace& space,
                                        std::vector<std::pair<GroupElement, Coefficient>> d,
                                        std::vector<std::pair<GroupElement, GroupElement>> sigma);
  /// `ddt`, `euler`, or `d:<g=c,...>;sigma:<g=g',...>`. Throws ParseError.
  static TermwiseDerivation parse(std::string_view selector, const SeriesSpace& space);

  TermwiseDerivation(SeriesSpace space, std::string name, CoefficientMap d, ShiftMap sigma, ShiftSolver solve,
                     TruncationMap truncation);

  const SeriesSpace& space() const { return space_; }
  const std::string& name() const { return name_; }

  Coefficient coefficient_factor(const GroupElement& g) const { return d_(g); }
  GroupElement exponent_shift(const GroupElement& g) const { return sigma_(g); }
  /// The unique g' with σ(g') = g and d(g') ≠ 0.
  std::optional<GroupElement> shift_preimage(const GroupElement& g) const { return solve_(g); }
  /// Lowest exponent that unknown terms at or above `truncation` can reach.
  OrderedValue shift_truncation(const OrderedValue& truncation) const { return truncation_(truncation); }

  Series operator()(const Series& s) const;

 private:
  SeriesSpace space_;
  std::string name_;
  CoefficientMap d_;
  ShiftMap sigma_;
  ShiftSolver solve_;
  TruncationMap truncation_;
};

/// (k((G)), D) with k·t^0 among the constants of D.
class DifferentialFieldSpec {
 public:
  /// Throws std::invalid_argument if d(0) ≠ 0.
  explicit DifferentialFieldSpec(TermwiseDerivation derivation);

  const SeriesSpace& space() const { return derivation_.space(); }
  const TermwiseDerivation& derivation() const { return derivation_; }

 private:
  TermwiseDerivation derivation_;
};

Series derive(const TermwiseDerivation& d, const Series& s);
Series derive(const DifferentialFieldSpec& spec, const Series& s);

/// Membership in S: no constant term.
bool has_no_constant_term(const Series& s);

/// va ≤ vb ⇔ vDa ≤ vDb for nonzero a, b with va, vb ≠ 0.
CheckReport check_condition_7(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples);
/// v(b·Da/Db) > 0 for va ≥ 0, vb > 0, evaluated as vb + vDa - vDb > 0.
/// Pairs with Da = 0 or Db = 0 are skipped.
CheckReport check_condition_6(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples);
/// D(ab) = a·Db + b·Da.
CheckReport check_leibniz(const DifferentialFieldSpec& spec, std::span<const std::pair<Series, Series>> samples);

/// Monomial s with v(b - Ds) > vb, built from the leading term of b.
/// Throws Obstruction when the leading exponent is not reachable.
Series asymptotic_section(const DifferentialFieldSpec& spec, const Series& b);

/// f = D on k((G)), S = series without constant term, φ = σ.
struct IntegrationProblem {
  Homomorphism<Series, Series> f;
  AsymptoticSection<Series, Series> section;
  PhiMap phi;
};

IntegrationProblem integration_problem(const DifferentialFieldSpec& spec);

/// The unique a ∈ S with Da = b, exactly or up to `precision`.
SolveResult<Series> integrate(const DifferentialFieldSpec& spec, const Series& b,
                              const OrderedValue& precision = OrderedValue::infinity(), std::size_t max_iter = 10000);

/// Antiderivative of an exact series computed term by term in one pass.
/// Throws Obstruction.
Series termwise_integral_oracle(const DifferentialFieldSpec& spec, const Series& b);

}  // namespace hahn

#endif  // HAHN_DIFFERENTIAL_HPP
