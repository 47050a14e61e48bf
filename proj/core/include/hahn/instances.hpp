#ifndef HAHN_INSTANCES_HPP
#define HAHN_INSTANCES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/report.hpp"
#include "hahn/series.hpp"

namespace hahn {

struct CheckOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  /// Sampled exponents lie in [-window, window].
  std::int64_t window = 10;
};

struct CheckSuite {
  std::string instance;
  std::vector<CheckReport> reports;

  bool passed() const;
};

/// Instances understood by run_instance_checks:
///  - `euler`, `ddt`: the built-in derivations; runs assumptions a)-c),
///    injectivity on S, the φ round trip, conditions (6)/(7) and Leibniz.
///  - `broken-a`: Euler with the codomain valuation coarsened on [2, 3], so
///    φ is monotone but not strictly; only a) fails.
///  - `broken-b`: Euler plus a map sending constants to t^-(window+5); S is
///    untouched, only b) fails.
///  - `broken-c`: Euler with a section that returns twice the monomial
///    antiderivative; only c) fails.
///  - `broken-fixture`: alias of `broken-b`.
std::vector<std::string> check_instance_names();

/// Throws ParseError for an unknown instance name.
CheckSuite run_instance_checks(std::string_view instance, const SeriesSpace& space, const CheckOptions& options);

}  // namespace hahn

#endif  // HAHN_INSTANCES_HPP
