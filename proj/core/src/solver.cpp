#include "hahn/solver.hpp"

#include <algorithm>

namespace hahn {

PhiMap PhiMap::identity(Domain domain) {
  auto forward = [](const GroupElement& g) { return g; };
  auto inverse = [domain](const GroupElement& g) -> std::optional<GroupElement> {
    if (!domain(g)) return std::nullopt;
    return g;
  };
  return PhiMap{forward, inverse, std::move(domain)};
}

bool PhiMap::in_domain(const OrderedValue& alpha) const {
  return alpha.is_infinite() || domain_(alpha.finite_value());
}

OrderedValue PhiMap::forward(const OrderedValue& alpha) const {
  if (alpha.is_infinite()) return alpha;
  if (!domain_(alpha.finite_value()))
    throw AlphaNotInDomain(alpha.to_string() + " is not a value of the section set S");
  return OrderedValue{forward_(alpha.finite_value())};
}

OrderedValue PhiMap::inverse(const OrderedValue& beta) const {
  if (beta.is_infinite()) return beta;
  auto alpha = inverse_(beta.finite_value());
  if (!alpha) throw AlphaNotInDomain(beta.to_string() + " has no preimage under phi");
  return OrderedValue{std::move(*alpha)};
}

nlohmann::json to_json(const TraceStep& step) {
  return nlohmann::json{{"iter", step.iter}, {"residual_value", step.residual_value.to_string()}, {"term", step.term}};
}

std::string trace_json_lines(std::span<const TraceStep> trace) {
  std::string out;
  for (const auto& step : trace) {
    out += to_json(step).dump();
    out += '\n';
  }
  return out;
}

CheckReport check_phi_roundtrip(const PhiMap& phi, std::span<const OrderedValue> domain_values,
                                std::span<const OrderedValue> codomain_values) {
  CheckReport report{"phi_roundtrip"};
  std::vector<std::pair<OrderedValue, OrderedValue>> mapped;
  for (const auto& alpha : domain_values) {
    ++report.checked;
    try {
      OrderedValue beta = phi.forward(alpha);
      const OrderedValue back = phi.inverse(beta);
      if (back != alpha)
        report.flag("inverse(forward(" + alpha.to_string() + ")) = " + back.to_string());
      mapped.emplace_back(alpha, std::move(beta));
    } catch (const AlphaNotInDomain& e) {
      report.flag(e.what());
    }
  }
  for (const auto& beta : codomain_values) {
    if (beta.is_infinite()) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    try {
      const OrderedValue there = phi.forward(phi.inverse(beta));
      if (there != beta) report.flag("forward(inverse(" + beta.to_string() + ")) = " + there.to_string());
    } catch (const AlphaNotInDomain& e) {
      report.flag(e.what());
    }
  }
  // Strict monotonicity on a totally ordered sample reduces to adjacent pairs.
  std::sort(mapped.begin(), mapped.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  mapped.erase(std::unique(mapped.begin(), mapped.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
               mapped.end());
  for (std::size_t i = 1; i < mapped.size(); ++i)
    if (!(mapped[i - 1].second < mapped[i].second))
      report.flag("forward not strictly monotone: " + mapped[i - 1].first.to_string() + " < " +
                  mapped[i].first.to_string() + " but images " + mapped[i - 1].second.to_string() + ", " +
                  mapped[i].second.to_string());
  return report;
}

}  // namespace hahn
