#ifndef HAHN_SAMPLING_HPP
#define HAHN_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "hahn/series.hpp"

namespace hahn {

/// Seeded generator of random exponents, coefficients and series. Draws are
/// reproducible across standard libraries: only the raw mt19937_64 stream is
/// used, never the implementation-defined std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

  /// Nonzero coefficient: small rationals n/d over Q, residues over F_p.
  Coefficient coefficient(const CoefficientField& field);
  /// Exponent with every component in [lo, hi]; rational groups also draw
  /// denominators in {1, 2, 3}.
  GroupElement exponent(const ValueGroup& group, std::int64_t lo, std::int64_t hi);

  struct Shape {
    std::int64_t lo = -10;
    std::int64_t hi = 10;
    std::size_t min_terms = 1;
    std::size_t max_terms = 8;
    /// Exponents rejected by this predicate are never drawn.
    std::function<bool(const GroupElement&)> allowed;
  };

  /// Exact series with between min_terms and max_terms terms (fewer if the
  /// window runs out of admissible exponents).
  Series series(const SeriesSpace& space, const Shape& shape);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hahn

#endif  // HAHN_SAMPLING_HPP
