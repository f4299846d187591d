#include "eqrisk/cli.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eqrisk/analysis.hpp"
#include "eqrisk/error.hpp"
#include "eqrisk/io.hpp"
#include "eqrisk/pricing.hpp"
#include "eqrisk/solver.hpp"

namespace eqrisk {

namespace {

struct CommonOptions {
  std::string path;
  std::string format = "text";
  int precision = 6;
  std::optional<double> risk_tol;
  std::optional<double> budget_tol;
  std::optional<int> max_iter;

  SolverConfig config() const {
    SolverConfig c;
    if (risk_tol) c.risk_tolerance = *risk_tol;
    c.budget_tolerance = budget_tol;
    if (max_iter) c.max_iterations = *max_iter;
    return c;
  }

  ReportOptions report() const {
    return {format == "csv" ? ReportFormat::Csv : ReportFormat::Text, precision};
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("instance", opts.path, "Instance file (JSON)")->required();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  cmd->add_option("--precision", opts.precision, "Decimal places in output")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();
  cmd->add_option("--risk-tol", opts.risk_tol, "Bisection bracket width tolerance on r");
  cmd->add_option("--budget-tol", opts.budget_tol, "Accepted |spend - budget| (default 1e-9*B)");
  cmd->add_option("--max-iter", opts.max_iter, "Maximum solver iterations");
}

std::vector<double> parse_times(const std::string& list) {
  std::vector<double> out;
  std::string_view rest(list);
  while (true) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    double value = 0.0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw CLI::ValidationError("--t", "expected a comma-separated list of numbers, got \"" +
                                            std::string(item) + "\"");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-risk budget allocation across delayed investment projects", "eqrisk"};
  app.require_subcommand(1);

  CommonOptions solve_opts, sweep_opts, sens_opts;
  std::string t_list;
  auto* solve = app.add_subcommand("solve", "Solve for the equal-risk allocation");
  add_common(solve, solve_opts);
  auto* sweep = app.add_subcommand("sweep", "Re-solve with every delay set to each t");
  add_common(sweep, sweep_opts);
  sweep->add_option("--t", t_list, "Comma-separated delay values")->required();
  auto* sens = app.add_subcommand("sensitivity", "Analytic sensitivities of the solution");
  add_common(sens, sens_opts);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  std::vector<double> t_values;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (sweep->parsed()) t_values = parse_times(t_list);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsageError;
  }

  try {
    if (solve->parsed()) {
      const auto instance = load_instance(solve_opts.path);
      const auto solution = solve_equal_risk(instance, solve_opts.config());
      const auto costs = effective_costs(instance);
      const auto profile = risk_profile(instance, costs, solution.allocation);
      out << render_solution(instance, costs, solution, profile, solve_opts.report());
    } else if (sweep->parsed()) {
      const auto instance = load_instance(sweep_opts.path);
      const auto rows = sweep_delay(instance, t_values, sweep_opts.config());
      out << render_sweep(instance, rows, sweep_opts.report());
    } else if (sens->parsed()) {
      const auto instance = load_instance(sens_opts.path);
      const auto solution = solve_equal_risk(instance, sens_opts.config());
      const auto s = sensitivities(instance, solution);
      out << render_sensitivities(instance, solution, s, sens_opts.report());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace eqrisk
