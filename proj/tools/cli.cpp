#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hahn/differential.hpp"
#include "hahn/errors.hpp"
#include "hahn/instances.hpp"
#include "hahn/pseudo_direct.hpp"
#include "hahn/series.hpp"
#include "hahn/solver.hpp"

namespace hahn::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kShownViolations = 3;

struct Config {
  std::string field = "rationals";
  std::string group = "int";
  std::string precision = "inf";
  std::size_t max_iter = 10000;
  std::string output = "text";
};

struct Resolved {
  SeriesSpace space;
  OrderedValue precision;
};

Resolved resolve(const Config& config) {
  SeriesSpace space{CoefficientField::from_name(config.field), ValueGroup::from_name(config.group)};
  return {space, parse_ordered_value(space.group(), config.precision)};
}

json config_json(const Config& c) {
  return {{"field", c.field}, {"group", c.group}, {"precision", c.precision}, {"max_iter", c.max_iter},
          {"output", c.output}};
}

json trace_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& step : trace) out.push_back(to_json(step));
  return out;
}

void print_trace(std::ostream& out, const std::vector<TraceStep>& trace) {
  for (const auto& step : trace) {
    out << "step " << step.iter << ": " << step.term << " -> residual value " << step.residual_value.to_string()
        << "\n";
  }
}

// Unknown terms of the input cannot be solved for, so the target precision
// never exceeds the input's own truncation.
OrderedValue effective_precision(const OrderedValue& requested, const Series& input) {
  return min_value(requested, input.truncation());
}

class Session {
 public:
  Session(const Config& config, std::ostream& out, std::ostream& err) : config_(config), out_(out), err_(err) {}

  bool json_mode() const { return config_.output == "json"; }

  void emit(const std::string& command, const json& result, const json& trace = json::array()) {
    json doc{{"command", command}, {"config", config_json(config_)}, {"result", result}, {"trace", trace}};
    out_ << doc.dump() << "\n";
  }

  int integrate(const std::string& selector, const std::string& text) {
    const Resolved r = resolve(config_);
    const DifferentialFieldSpec spec{TermwiseDerivation::parse(selector, r.space)};
    const Series b = r.space.parse(text);
    return run_solver("integrate", [&] {
      return integrate_result(spec, b, effective_precision(r.precision, b));
    });
  }

  int derive(const std::string& selector, const std::string& text) {
    const Resolved r = resolve(config_);
    const TermwiseDerivation d = TermwiseDerivation::parse(selector, r.space);
    const Series result = d(r.space.parse(text));
    if (json_mode()) {
      emit("derive", {{"series", to_string(result)}});
    } else {
      out_ << to_string(result) << "\n";
    }
    return kOk;
  }

  int decompose(const std::string& parts, const std::string& text) {
    const Resolved r = resolve(config_);
    std::vector<Subgroup> subgroups;
    for (const auto& piece : split_parts(parts)) subgroups.push_back(Subgroup::parse(piece, r.space));
    if (subgroups.empty()) throw ParseError("--parts needs at least one subgroup");
    const Series a = r.space.parse(text);
    const OrderedValue precision = effective_precision(r.precision, a);
    try {
      const SolveResult<ProductElement> result = decompose_impl(subgroups, a, precision);
      const std::vector<bool> verdicts = witness_verdicts(subgroups, a, result.iterations);
      if (json_mode()) {
        json components = json::array();
        for (std::size_t i = 0; i < subgroups.size(); ++i) {
          components.push_back({{"subgroup", subgroups[i].name()}, {"series", to_string(result.solution[i])}});
        }
        json trace = trace_json(result.trace);
        for (std::size_t i = 0; i < trace.size() && i < verdicts.size(); ++i) trace[i]["witness"] = verdicts[i];
        emit("decompose",
             {{"components", components}, {"iterations", result.iterations},
              {"residual_value", result.residual_value.to_string()}, {"exact", result.exact}},
             trace);
      } else {
        for (std::size_t i = 0; i < subgroups.size(); ++i) {
          out_ << subgroups[i].name() << ": " << to_string(result.solution[i]) << "\n";
        }
        out_ << "iterations: " << result.iterations << "\n";
        out_ << "residual value: " << result.residual_value.to_string() << "\n";
        out_ << "exact: " << (result.exact ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
          out_ << "step " << result.trace[i].iter << ": " << result.trace[i].term
               << " witness: " << (i < verdicts.size() && verdicts[i] ? "ok" : "failed") << "\n";
        }
      }
      return kOk;
    } catch (const SolveError& e) {
      return report_solve_error("decompose", e);
    }
  }

  int check(const std::string& instance, std::size_t samples, std::uint64_t seed) {
    const Resolved r = resolve(config_);
    CheckOptions options;
    options.samples = samples;
    options.seed = seed;
    const CheckSuite suite = run_instance_checks(instance, r.space, options);
    if (json_mode()) {
      json reports = json::array();
      for (const auto& rep : suite.reports) {
        reports.push_back({{"name", rep.name}, {"passed", rep.passed()}, {"checked", rep.checked},
                           {"skipped", rep.skipped}, {"flagged", rep.flagged}, {"violations", rep.violations}});
      }
      emit("check", {{"instance", suite.instance}, {"samples", samples}, {"seed", seed}, {"passed", suite.passed()},
                     {"reports", reports}});
    } else {
      out_ << "instance: " << suite.instance << " (samples " << samples << ", seed " << seed << ")\n";
      for (const auto& rep : suite.reports) {
        out_ << rep.name << ": " << (rep.passed() ? "pass" : "FAIL") << " (checked " << rep.checked << ", skipped "
             << rep.skipped << ", flagged " << rep.flagged << ")\n";
        const std::size_t shown = std::min<std::size_t>(rep.violations.size(), kShownViolations);
        for (std::size_t i = 0; i < shown; ++i) out_ << "  " << rep.violations[i] << "\n";
        if (rep.flagged > shown) out_ << "  ... " << rep.flagged - shown << " more\n";
      }
      out_ << "result: " << (suite.passed() ? "pass" : "FAIL") << "\n";
    }
    return suite.passed() ? kOk : kCheckFailed;
  }

  int quotient(const std::string& alpha_text, const std::string& text) {
    const Resolved r = resolve(config_);
    const OrderedValue alpha = parse_ordered_value(r.space.group(), alpha_text);
    const Series s = r.space.parse(text);
    const Series rep = truncate(s, alpha);
    const Series shown = r.space.make({rep.terms().begin(), rep.terms().end()});
    const OrderedValue value = quotient_valuation(s, alpha);
    if (json_mode()) {
      emit("quotient", {{"alpha", alpha.to_string()}, {"representative", to_string(shown)},
                        {"value", value.to_string()}});
    } else {
      out_ << to_string(shown) << "\n";
      out_ << "value: " << value.to_string() << "\n";
    }
    return kOk;
  }

 private:
  static std::vector<std::string> split_parts(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : text) {
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (c == ',' && depth == 0) {
        out.push_back(current);
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) out.push_back(current);
    return out;
  }

  SolveResult<Series> integrate_result(const DifferentialFieldSpec& spec, const Series& b,
                                       const OrderedValue& precision) {
    return hahn::integrate(spec, b, precision, config_.max_iter);
  }

  SolveResult<ProductElement> decompose_impl(const std::vector<Subgroup>& subgroups, const Series& a,
                                             const OrderedValue& precision) {
    return hahn::decompose(subgroups, a, precision, config_.max_iter);
  }

  // Replays the section on the successive residuals and checks each step's
  // witness condition.
  static std::vector<bool> witness_verdicts(const std::vector<Subgroup>& subgroups, const Series& a,
                                            std::size_t steps) {
    std::vector<bool> verdicts;
    Series residual = a;
    for (std::size_t i = 0; i < steps; ++i) {
      const ProductElement t = pseudo_direct_section(subgroups, residual);
      verdicts.push_back(check_pseudo_direct_witness(residual, t));
      residual = residual - sum_map(t);
    }
    return verdicts;
  }

  template <class Run>
  int run_solver(const std::string& command, Run run) {
    try {
      const SolveResult<Series> result = run();
      if (json_mode()) {
        emit(command,
             {{"solution", to_string(result.solution)}, {"iterations", result.iterations},
              {"residual_value", result.residual_value.to_string()}, {"exact", result.exact}},
             trace_json(result.trace));
      } else {
        out_ << to_string(result.solution) << "\n";
        out_ << "iterations: " << result.iterations << "\n";
        out_ << "residual value: " << result.residual_value.to_string() << "\n";
        out_ << "exact: " << (result.exact ? "true" : "false") << "\n";
        print_trace(out_, result.trace);
      }
      return kOk;
    } catch (const SolveError& e) {
      return report_solve_error(command, e);
    }
  }

  int report_solve_error(const std::string& command, const SolveError& e) {
    int code = kSolverError;
    std::string kind = "solver_error";
    json extra = json::object();
    if (const auto* failure = dynamic_cast<const SectionFailure*>(&e)) {
      code = kSectionFailure;
      kind = "section_failure";
      if (failure->exponent()) extra["exponent"] = failure->exponent()->to_string();
    } else if (dynamic_cast<const IterationLimit*>(&e) != nullptr) {
      code = kIterationLimit;
      kind = "iteration_limit";
    } else if (dynamic_cast<const NoProgress*>(&e) != nullptr) {
      kind = "no_progress";
    }
    err_ << "error: " << e.what() << "\n";
    if (json_mode()) {
      json result{{"error", kind}, {"message", e.what()}, {"residual_value", e.residual_value().to_string()},
                  {"iterations", e.iterations()}};
      result.update(extra);
      emit(command, result, trace_json(e.trace()));
    } else {
      print_trace(out_, e.trace());
    }
    return code;
  }

  const Config& config_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized power series: integration, decomposition and hypothesis checks", "hahn"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--field", config.field, "Coefficient field: rationals or prime:<p>")->capture_default_str();
  app.add_option("--group", config.group, "Value group: int, rat or lex2")->capture_default_str();
  app.add_option("--precision", config.precision, "Target precision: exponent or inf")->capture_default_str();
  app.add_option("--max-iter", config.max_iter, "Iteration limit of the solver")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", config.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string derivation;
  std::string series;
  std::string parts;
  std::string instance;
  std::string alpha;
  std::size_t samples = 500;
  std::uint64_t seed = 0;

  auto* integrate_cmd = app.add_subcommand("integrate", "Solve D(a) = b for a without constant term");
  integrate_cmd->add_option("--derivation", derivation, "ddt, euler or d:<table>;sigma:<table>")->required();
  integrate_cmd->add_option("series", series, "Right-hand side b")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Apply a derivation");
  derive_cmd->add_option("--derivation", derivation, "ddt, euler or d:<table>;sigma:<table>")->required();
  derive_cmd->add_option("series", series, "Input series")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a series along subgroups");
  decompose_cmd->add_option("--parts", parts, "Comma-separated subgroup patterns")->required();
  decompose_cmd->add_option("series", series, "Input series")->required();

  auto* check_cmd = app.add_subcommand("check", "Sample the solver hypotheses for an instance");
  check_cmd->add_option("--instance", instance, "euler, ddt, broken-a, broken-b, broken-c or broken-fixture")
      ->required();
  check_cmd->add_option("--samples", samples, "Samples per check")->capture_default_str();
  check_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();

  auto* quotient_cmd = app.add_subcommand("quotient", "Representative and value in the quotient by B_alpha(0)");
  quotient_cmd->add_option("--alpha", alpha, "Ball radius")->required();
  quotient_cmd->add_option("series", series, "Input series")->required();

  for (auto* sub : {integrate_cmd, derive_cmd, decompose_cmd, check_cmd, quotient_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  Session session{config, out, err};
  try {
    if (*integrate_cmd) return session.integrate(derivation, series);
    if (*derive_cmd) return session.derive(derivation, series);
    if (*decompose_cmd) return session.decompose(parts, series);
    if (*check_cmd) return session.check(instance, samples, seed);
    return session.quotient(alpha, series);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const FieldError& e) {
    err << "field error: " << e.what() << "\n";
    return kParseError;
  } catch (const Ambiguous& e) {
    err << "invalid derivation: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSolverError;
  }
}

}  // namespace hahn::cli
