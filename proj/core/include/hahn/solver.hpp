#ifndef HAHN_SOLVER_HPP
#define HAHN_SOLVER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hahn/errors.hpp"
#include "hahn/ordered_value.hpp"
#include "hahn/report.hpp"
#include "hahn/ultrametric.hpp"

namespace hahn {

/// Thrown by a section oracle that has no s ∈ S improving the given element.
class SectionUnavailable : public Error {
 public:
  explicit SectionUnavailable(const std::string& what, std::optional<GroupElement> exponent = std::nullopt)
      : Error(what), exponent_(std::move(exponent)) {}

  /// The exponent the oracle could not reach, when there is one.
  const std::optional<GroupElement>& exponent() const { return exponent_; }

 private:
  std::optional<GroupElement> exponent_;
};

/// One correction a_k = a_{k-1} + s_k of a solve run.
struct TraceStep {
  std::size_t iter = 0;
  /// w(b - f(a_k)), or its lower bound when the residual is only known up to
  /// its truncation.
  OrderedValue residual_value;
  /// w(f(s_k)); equals the previous residual value.
  OrderedValue image_value;
  std::string term;
};

/// {"iter": k, "residual_value": str, "term": series-string}
nlohmann::json to_json(const TraceStep& step);
/// One JSON object per line.
std::string trace_json_lines(std::span<const TraceStep> trace);

class SolveError : public Error {
 public:
  SolveError(const std::string& what, OrderedValue residual_value, std::vector<TraceStep> trace)
      : Error(what), residual_value_(std::move(residual_value)), trace_(std::move(trace)) {}

  const OrderedValue& residual_value() const { return residual_value_; }
  const std::vector<TraceStep>& trace() const { return trace_; }
  std::size_t iterations() const { return trace_.size(); }

 private:
  OrderedValue residual_value_;
  std::vector<TraceStep> trace_;
};

/// Assumption c) fails for the current residual.
class SectionFailure : public SolveError {
 public:
  SectionFailure(const std::string& what, OrderedValue residual_value, std::vector<TraceStep> trace,
                 std::optional<GroupElement> exponent)
      : SolveError(what, std::move(residual_value), std::move(trace)), exponent_(std::move(exponent)) {}

  const std::optional<GroupElement>& exponent() const { return exponent_; }

 private:
  std::optional<GroupElement> exponent_;
};

/// The oracle returned an s that did not strictly raise the residual value.
class NoProgress : public SolveError {
 public:
  using SolveError::SolveError;
};

class IterationLimit : public SolveError {
 public:
  using SolveError::SolveError;
};

template <class A>
struct SolveResult {
  A solution;
  OrderedValue residual_value;
  std::size_t iterations = 0;
  /// True iff the final residual is the zero element of the codomain.
  bool exact = false;
  std::vector<TraceStep> trace;
};

/// Group homomorphism f : A -> B.
template <ValuedGroupElement A, ValuedGroupElement B>
struct Homomorphism {
  std::function<B(const A&)> apply;
  A domain_zero;

  B operator()(const A& a) const { return apply(a); }
};

/// Oracle for assumption c): section(b) = s ∈ S with w(b - f(s)) > w(b).
template <ValuedGroupElement A, ValuedGroupElement B>
struct AsymptoticSection {
  std::function<A(const B&)> section;
  std::function<bool(const A&)> contains;

  A operator()(const B& b) const { return section(b); }
};

/// The value correspondence φ : v(S) -> w(B) and its inverse on w(B) \ {∞}.
/// ∞ is mapped to ∞ in both directions.
class PhiMap {
 public:
  using Forward = std::function<GroupElement(const GroupElement&)>;
  using Inverse = std::function<std::optional<GroupElement>(const GroupElement&)>;
  using Domain = std::function<bool(const GroupElement&)>;

  PhiMap(Forward forward, Inverse inverse, Domain domain)
      : forward_(std::move(forward)), inverse_(std::move(inverse)), domain_(std::move(domain)) {}

  /// φ = id on the values accepted by `domain`.
  static PhiMap identity(Domain domain = [](const GroupElement&) { return true; });

  bool in_domain(const OrderedValue& alpha) const;
  /// Throws AlphaNotInDomain outside v(S) ∪ {∞}.
  OrderedValue forward(const OrderedValue& alpha) const;
  /// Throws AlphaNotInDomain when beta has no preimage in v(S).
  OrderedValue inverse(const OrderedValue& beta) const;

 private:
  Forward forward_;
  Inverse inverse_;
  Domain domain_;
};

/// Solves f(a) = b by repeated asymptotic correction. Each step adds
/// s_k = section(r_{k-1}) and the residual value w(r_k) must strictly rise.
/// Stops on an exact zero residual or once the residual is known to lie in
/// B_precision(0).
template <ValuedGroupElement A, ValuedGroupElement B>
SolveResult<A> solve(const Homomorphism<A, B>& f, const AsymptoticSection<A, B>& section, const B& b,
                     const OrderedValue& precision, std::size_t max_iter) {
  SolveResult<A> result{f.domain_zero};
  B residual = b;
  for (;;) {
    if (is_exact_zero(residual)) {
      result.exact = true;
      result.residual_value = OrderedValue::infinity();
      return result;
    }
    const OrderedValue bound = value_lower_bound(residual);
    if (bound >= precision) {
      result.residual_value = bound;
      return result;
    }
    const OrderedValue current = valuation(residual);
    if (result.iterations >= max_iter)
      throw IterationLimit("iteration limit " + std::to_string(max_iter) + " reached with residual value " +
                               current.to_string(),
                           current, std::move(result.trace));

    std::optional<A> step;
    try {
      step = section(residual);
    } catch (const SectionUnavailable& e) {
      throw SectionFailure(std::string("section failure at residual value ") + current.to_string() + ": " + e.what(),
                           current, std::move(result.trace), e.exponent());
    }
    A next = result.solution + *step;
    B next_residual = b - f(next);
    const OrderedValue next_value = value_lower_bound(next_residual);
    ++result.iterations;
    result.trace.push_back(TraceStep{result.iterations, next_value, value_lower_bound(f(*step)), to_string(*step)});
    if (!(next_value > current))
      throw NoProgress("correction " + to_string(*step) + " left the residual value at " + next_value.to_string() +
                           " (was " + current.to_string() + ")",
                       current, std::move(result.trace));
    result.solution = std::move(next);
    residual = std::move(next_residual);
  }
}

/// B_{φα}(f a), the image of B_α(a) when the hypotheses hold.
template <ValuedGroupElement A, ValuedGroupElement B>
Ball<B> image_ball(const Homomorphism<A, B>& f, const PhiMap& phi, const A& a, const OrderedValue& alpha) {
  return Ball<B>{f(a), phi.forward(alpha)};
}

template <ValuedGroupElement A>
struct PulledNest {
  Nest<A> nest;
  A witness;
};

/// Lifts a finite nest in B to a nest in A whose balls map onto the given
/// ones. Centers are built outermost first: each new center is the previous
/// one plus a solve of the remaining residual, so it stays inside every
/// earlier domain ball. The innermost center is the witness.
template <ValuedGroupElement A, ValuedGroupElement B>
PulledNest<A> pull_nest(const Homomorphism<A, B>& f, const AsymptoticSection<A, B>& section, const PhiMap& phi,
                        const Nest<B>& target, const OrderedValue& precision, std::size_t max_iter) {
  std::vector<Ball<A>> balls;
  balls.reserve(target.size());
  A center = f.domain_zero;
  for (const auto& ball : target.balls()) {
    const SolveResult<A> step = solve(f, section, ball.center - f(center), precision, max_iter);
    center = center + step.solution;
    balls.push_back(Ball<A>{center, phi.inverse(ball.radius)});
  }
  return PulledNest<A>{Nest<A>{std::move(balls)}, std::move(center)};
}

template <ValuedGroupElement A, ValuedGroupElement B>
PulledNest<A> pull_nest(const Homomorphism<A, B>& f, const AsymptoticSection<A, B>& section, const PhiMap& phi,
                        std::vector<Ball<B>> target, const OrderedValue& precision, std::size_t max_iter) {
  return pull_nest(f, section, phi, Nest<B>{std::move(target)}, precision, max_iter);
}

/// Assumption a): vs ↦ wf(s) is well defined, strictly order preserving and
/// agrees with φ on the sampled elements of S.
template <ValuedGroupElement A, ValuedGroupElement B>
CheckReport check_assumption_a(const Homomorphism<A, B>& f, const PhiMap& phi, std::span<const A> samples) {
  CheckReport report{"assumption_a"};
  struct Point {
    OrderedValue vs;
    OrderedValue wfs;
    std::string label;
  };
  std::vector<Point> points;
  points.reserve(samples.size());
  for (const auto& s : samples) {
    ++report.checked;
    Point p{valuation(s), valuation(f(s)), to_string(s)};
    if (!phi.in_domain(p.vs))
      report.flag("v(" + p.label + ") = " + p.vs.to_string() + " is outside the domain of phi");
    else if (phi.forward(p.vs) != p.wfs)
      report.flag("phi(" + p.vs.to_string() + ") = " + phi.forward(p.vs).to_string() + " but wf(" + p.label +
                  ") = " + p.wfs.to_string());
    points.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      const Point& x = points[i];
      const Point& y = points[j];
      if (i < j && x.vs == y.vs && x.wfs != y.wfs)
        report.flag("not well defined: v(" + x.label + ") = v(" + y.label + ") = " + x.vs.to_string() +
                    " but wf differ (" + x.wfs.to_string() + ", " + y.wfs.to_string() + ")");
      else if (x.vs < y.vs && !(x.wfs < y.wfs))
        report.flag("not strictly order preserving: v(" + x.label + ") = " + x.vs.to_string() + " < v(" + y.label +
                    ") = " + y.vs.to_string() + " but wf " + x.wfs.to_string() + " >= " + y.wfs.to_string());
    }
  }
  return report;
}

/// Assumption b): va >= vs implies wf(a) >= wf(s), for pairs (a, s).
template <ValuedGroupElement A, ValuedGroupElement B>
CheckReport check_assumption_b(const Homomorphism<A, B>& f, std::span<const std::pair<A, A>> samples) {
  CheckReport report{"assumption_b"};
  for (const auto& [a, s] : samples) {
    if (!(valuation(a) >= valuation(s))) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const OrderedValue wfa = valuation(f(a));
    const OrderedValue wfs = valuation(f(s));
    if (wfa < wfs)
      report.flag("v(" + to_string(a) + ") >= v(" + to_string(s) + ") but wf(a) = " + wfa.to_string() +
                  " < wf(s) = " + wfs.to_string());
  }
  return report;
}

/// Assumption c): for each b ≠ 0 the section gives s ∈ S with
/// w(b - f(s)) > w(b), and consequently w(f(s)) = w(b).
template <ValuedGroupElement A, ValuedGroupElement B>
CheckReport check_assumption_c(const Homomorphism<A, B>& f, const AsymptoticSection<A, B>& section,
                               std::span<const B> samples) {
  CheckReport report{"assumption_c"};
  for (const auto& b : samples) {
    if (is_exact_zero(b)) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const OrderedValue wb = valuation(b);
    std::optional<A> s;
    try {
      s = section(b);
    } catch (const SectionUnavailable& e) {
      report.flag("SectionFailure for " + to_string(b) + ": " + e.what());
      continue;
    }
    if (section.contains && !section.contains(*s)) report.flag("section(" + to_string(b) + ") is not in S");
    const B image = f(*s);
    const OrderedValue improved = value_lower_bound(b - image);
    if (!(improved > wb))
      report.flag("w(b - f(s)) = " + improved.to_string() + " not > w(b) = " + wb.to_string() + " for b = " +
                  to_string(b));
    else if (valuation(image) != wb)
      report.flag("w(f(s)) = " + valuation(image).to_string() + " differs from w(b) = " + wb.to_string());
  }
  return report;
}

/// For S a subgroup: f(s) = f(s') implies s = s'.
template <ValuedGroupElement A, ValuedGroupElement B>
CheckReport verify_section_injectivity(const Homomorphism<A, B>& f, std::span<const std::pair<A, A>> samples) {
  CheckReport report{"injectivity"};
  for (const auto& [s, t] : samples) {
    ++report.checked;
    if (!(s == t) && f(s) == f(t))
      report.flag("f(" + to_string(s) + ") = f(" + to_string(t) + ") = " + to_string(f(s)));
  }
  return report;
}

/// inverse∘forward = id on `domain_values`, forward∘inverse = id on
/// `codomain_values`, and forward strictly monotone on `domain_values`.
CheckReport check_phi_roundtrip(const PhiMap& phi, std::span<const OrderedValue> domain_values,
                                std::span<const OrderedValue> codomain_values);

}  // namespace hahn

#endif  // HAHN_SOLVER_HPP
