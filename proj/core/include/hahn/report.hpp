#ifndef HAHN_REPORT_HPP
#define HAHN_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hahn {

/// Outcome of a sampled hypothesis check. Every violation is counted; only
/// the first `kKeptMessages` are kept verbatim.
struct CheckReport {
  static constexpr std::size_t kKeptMessages = 16;

  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t flagged = 0;
  std::vector<std::string> violations;

  bool passed() const { return flagged == 0; }
  void flag(std::string what) {
    ++flagged;
    if (violations.size() < kKeptMessages) violations.push_back(std::move(what));
  }
};

}  // namespace hahn

#endif  // HAHN_REPORT_HPP
