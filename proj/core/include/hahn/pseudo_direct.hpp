#ifndef HAHN_PSEUDO_DIRECT_HPP
#define HAHN_PSEUDO_DIRECT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/series.hpp"
#include "hahn/solver.hpp"
#include "hahn/ultrametric.hpp"

namespace hahn {

/// No component subgroup can absorb the leading term.
class NotPseudoDirect : public SectionUnavailable {
 public:
  using SectionUnavailable::SectionUnavailable;
};

/// Subgroup of k((G)) given either by a support pattern (all series whose
/// support lies in a set of exponents) or as the span k·generator.
class Subgroup {
 public:
  using Pattern = std::function<bool(const GroupElement&)>;

  static Subgroup support(std::string name, Pattern pattern);
  static Subgroup even();
  static Subgroup odd();
  /// Integral exponents g ≡ remainder (mod modulus).
  static Subgroup residue(std::int64_t modulus, std::int64_t remainder);
  static Subgroup exponent_set(std::vector<GroupElement> exponents);
  static Subgroup span(Series generator);
  /// `even`, `odd`, `mod:<k>:<r>`, `set:{g1,g2,...}`. Throws ParseError.
  static Subgroup parse(std::string_view text, const SeriesSpace& space);

  const std::string& name() const { return name_; }
  bool is_span() const { return generator_.has_value(); }

  bool contains(const Series& a) const;
  /// x in this subgroup with v(x) = v(a) and v(a - x) > v(a), if any.
  std::optional<Series> cover_leading_term(const Series& a) const;

 private:
  Subgroup(std::string name, Pattern pattern, std::optional<Series> generator);

  std::string name_;
  Pattern pattern_;
  std::optional<Series> generator_;
};

/// Element of A_1 × ... × A_n.
class ProductElement {
 public:
  ProductElement() = default;
  explicit ProductElement(std::vector<Series> components);
  static ProductElement zero(const SeriesSpace& space, std::size_t n);

  std::span<const Series> components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  const Series& operator[](std::size_t i) const { return components_[i]; }

  friend ProductElement operator+(const ProductElement& a, const ProductElement& b);
  friend ProductElement operator-(const ProductElement& a, const ProductElement& b);
  friend ProductElement operator-(const ProductElement& a);
  friend bool operator==(const ProductElement&, const ProductElement&) = default;

 private:
  std::vector<Series> components_;
};

/// min_i v(a_i); ∞ iff every component is zero.
OrderedValue min_valuation(const ProductElement& t);
OrderedValue valuation(const ProductElement& t);
OrderedValue value_lower_bound(const ProductElement& t);
bool is_exact_zero(const ProductElement& t);
/// `(t^2, 0)`
std::string to_string(const ProductElement& t);

/// Σ a_i in the ambient group.
Series sum_map(const ProductElement& t);

/// Witness for a ≠ 0: the leading term of a goes to the lowest-index
/// subgroup that can absorb it, all other components zero. Throws
/// NotPseudoDirect.
ProductElement pseudo_direct_section(std::span<const Subgroup> subgroups, const Series& a);

/// v Σ a_i = min v a_i and v(a - Σ a_i) > v a.
bool check_pseudo_direct_witness(const Series& a, const ProductElement& t);

/// f = sum_map on the product with the minimum valuation; S = tuples with
/// v Σ a_i = min v a_i; φ = id.
struct DecompositionProblem {
  Homomorphism<ProductElement, Series> f;
  AsymptoticSection<ProductElement, Series> section;
  PhiMap phi;
};

DecompositionProblem decomposition_problem(std::vector<Subgroup> subgroups, const SeriesSpace& space);

/// Tuple with sum_map(result) = a exactly or up to precision.
SolveResult<ProductElement> decompose(std::span<const Subgroup> subgroups, const Series& a,
                                      const OrderedValue& precision = OrderedValue::infinity(),
                                      std::size_t max_iter = 10000);

/// Componentwise nest intersection; an empty nest contributes zero.
ProductElement product_nest_intersect(const SeriesSpace& space, std::span<const Nest<Series>> nests);

}  // namespace hahn

#endif  // HAHN_PSEUDO_DIRECT_HPP
