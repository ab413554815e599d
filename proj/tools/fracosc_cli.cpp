// fracosc: solve fractional linear oscillator problems and study convergence.
//
//   fracosc solve     --problem example1 --method abm --n 20 [--out s.csv]
//   fracosc converge  --problem example1 --methods enfds,abm --n 10,20,40 --rule exact
//   fracosc stability --problem example1
//   fracosc ml        --alpha 1.8 --beta 1 --z -1.5
//
// Exit codes: 0 success, 2 usage or configuration error, 3 numerical/solver error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracosc/analysis.hpp"
#include "fracosc/error.hpp"
#include "fracosc/model.hpp"
#include "fracosc/special.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fracosc::ProblemSpec load_problem(const std::string& source) {
  namespace fs = std::filesystem;
  if (source.ends_with(".json") || fs::is_regular_file(source)) return fracosc::load_problem_file(source);
  return fracosc::builtin_problem(source);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("invalid N '" + item + "'");
    }
    if (used != item.size()) throw ConfigError("invalid N '" + item + "'");
    out.push_back(v);
  }
  return out;
}

fracosc::InitialStep parse_initial_step(const std::string& name) {
  if (name == "taylor") return fracosc::InitialStep::taylor;
  if (name == "transposed") return fracosc::InitialStep::transposed;
  throw ConfigError("unknown --x1 variant '" + name + "'; valid: taylor, transposed");
}

/// Writes to the file at `path`, or stdout when the path is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  fn(out);
  if (!out) throw fracosc::Error("failed writing '" + path + "'");
}

struct SolveArgs {
  std::string problem = "example1";
  std::string method = "enfds";
  int n = 0;
  std::string out;
  std::string format = "csv";
  std::string x1 = "taylor";
  bool no_stability_check = false;
  bool with_exact = false;
};

int run_solve(const SolveArgs& args) {
  const auto spec = load_problem(args.problem);
  const auto method = fracosc::parse_method(args.method);
  const auto initial_step = parse_initial_step(args.x1);
  if (args.n < 1) throw ConfigError("--n must be >= 1");
  if (args.with_exact && !spec.exact) throw ConfigError("--with-exact: problem has no exact solution");
  const fracosc::UniformGrid grid(args.n, spec.problem.horizon);

  fracosc::SolveOptions options;
  options.enforce_stability = !args.no_stability_check;
  options.initial_step = initial_step;
  if (method == fracosc::Method::enfds && args.no_stability_check) {
    const double tau0 = fracosc::stability_threshold(spec.problem);
    if (grid.step() > tau0) {
      std::cerr << "warning: tau = " << fracosc::format_number(grid.step())
                << " exceeds stability threshold tau0 = " << fracosc::format_number(tau0) << '\n';
    }
  }
  const auto sol = fracosc::solve(method, spec.problem, grid, options);

  std::vector<double> exact;
  if (args.with_exact) {
    for (int k = 0; k <= grid.n_steps(); ++k) exact.push_back(fracosc::evaluate_exact(*spec.exact, grid.node(k)));
  }

  with_output(args.out, [&](std::ostream& os) {
    const auto size = static_cast<std::size_t>(grid.n_steps()) + 1;
    if (args.format == "json") {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < size; ++k) {
        nlohmann::ordered_json row;
        row["t"] = std::stod(fracosc::format_number(grid.node(static_cast<int>(k))));
        row["x"] = std::stod(fracosc::format_number(sol.x[k]));
        if (sol.y) row["y"] = std::stod(fracosc::format_number((*sol.y)[k]));
        if (!exact.empty()) row["exact"] = std::stod(fracosc::format_number(exact[k]));
        rows.push_back(std::move(row));
      }
      os << rows.dump(2) << '\n';
      return;
    }
    os << "t,x" << (sol.y ? ",y" : "") << (exact.empty() ? "" : ",exact") << '\n';
    for (std::size_t k = 0; k < size; ++k) {
      os << fracosc::format_number(grid.node(static_cast<int>(k))) << ',' << fracosc::format_number(sol.x[k]);
      if (sol.y) os << ',' << fracosc::format_number((*sol.y)[k]);
      if (!exact.empty()) os << ',' << fracosc::format_number(exact[k]);
      os << '\n';
    }
  });
  return kExitOk;
}

struct ConvergeArgs {
  std::string problem = "example1";
  std::string methods = "enfds,abm";
  std::string n_list = "10,20,40,80,160,320,640";
  std::string rule = "exact";
  std::string out;
  std::string format = "csv";
  std::string x1 = "taylor";
  int jobs = 1;
  bool no_stability_check = false;
};

int run_converge(const ConvergeArgs& args) {
  const auto spec = load_problem(args.problem);
  std::vector<fracosc::Method> methods;
  for (const auto& m : split_list(args.methods)) methods.push_back(fracosc::parse_method(m));
  const auto n_list = parse_n_list(args.n_list);
  fracosc::validate_ladder(n_list);
  const auto rule = fracosc::parse_rule(args.rule);
  if (rule == fracosc::ErrorRule::exact && !spec.exact) {
    throw ConfigError("problem '" + spec.name + "' has no exact solution; use --rule runge");
  }
  if (args.jobs < 1) throw ConfigError("--jobs must be >= 1");

  fracosc::LadderOptions options;
  options.jobs = args.jobs;
  options.solve.enforce_stability = !args.no_stability_check;
  options.solve.initial_step = parse_initial_step(args.x1);
  const auto reports = fracosc::convergence_ladder(spec.problem, spec.exact, methods, n_list, rule, options);

  with_output(args.out, [&](std::ostream& os) {
    if (args.format == "json") {
      fracosc::write_report_json(os, reports);
    } else {
      fracosc::write_report_csv(os, reports);
    }
  });

  bool failed = false;
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      if (!row.xi) failed = true;
      if (!row.note.empty()) {
        std::cerr << fracosc::method_name(r.method) << " N=" << row.n_steps << ": " << row.note << '\n';
      }
    }
  }
  return failed ? kExitSolver : kExitOk;
}

int run_stability(const std::string& problem) {
  const auto spec = load_problem(problem);
  const double tau0 = fracosc::stability_threshold(spec.problem);
  const double horizon = spec.problem.horizon;
  auto min_n = static_cast<long long>(std::ceil(horizon / tau0));
  if (min_n < 1) min_n = 1;
  while (horizon / static_cast<double>(min_n) > tau0) ++min_n;
  while (min_n > 1 && horizon / static_cast<double>(min_n - 1) <= tau0) --min_n;
  std::cout << "tau0 = " << fracosc::format_number(tau0) << '\n';
  std::cout << "min_n = " << min_n << '\n';
  return kExitOk;
}

struct MlArgs {
  double alpha = 1.0;
  double beta = 1.0;
  double z = 0.0;
  double tol = 1e-15;
  int max_terms = 500;
};

int run_ml(const MlArgs& args) {
  const double v = fracosc::mittag_leffler({args.alpha, args.beta, args.tol, args.max_terms}, args.z);
  std::printf("%.17g\n", v);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical solvers for fractional linear oscillators"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"csv", "json"};

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one problem on one grid and write t,x[,y] samples");
  solve->add_option("--problem", solve_args.problem, "Built-in name or path to a problem JSON file")->capture_default_str();
  solve->add_option("--method", solve_args.method, "enfds or abm")->capture_default_str();
  solve->add_option("--n", solve_args.n, "Number of steps N")->required();
  solve->add_option("--out", solve_args.out, "Output file (stdout when omitted)");
  solve->add_option("--format", solve_args.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  solve->add_option("--x1", solve_args.x1, "ENFDS start-up value: taylor (a1 + tau a2) or transposed (a2 + tau a1)")
      ->capture_default_str();
  solve->add_flag("--no-stability-check", solve_args.no_stability_check, "Downgrade the ENFDS step bound to a warning");
  solve->add_flag("--with-exact", solve_args.with_exact, "Add an exact-solution column");

  ConvergeArgs conv_args;
  auto* converge = app.add_subcommand("converge", "Run a doubling ladder and report errors and observed orders");
  converge->add_option("--problem", conv_args.problem, "Built-in name or path to a problem JSON file")->capture_default_str();
  converge->add_option("--methods", conv_args.methods, "Comma-separated subset of enfds,abm")->capture_default_str();
  converge->add_option("--n", conv_args.n_list, "Comma-separated doubling list of N")->capture_default_str();
  converge->add_option("--rule", conv_args.rule, "exact or runge")->capture_default_str();
  converge->add_option("--out", conv_args.out, "Output file (stdout when omitted)");
  converge->add_option("--format", conv_args.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  converge->add_option("--jobs", conv_args.jobs, "Worker threads for independent rungs")->capture_default_str();
  converge->add_option("--x1", conv_args.x1, "ENFDS start-up value: taylor or transposed")->capture_default_str();
  converge->add_flag("--no-stability-check", conv_args.no_stability_check, "Downgrade the ENFDS step bound to a warning");

  std::string stability_problem = "example1";
  auto* stability = app.add_subcommand("stability", "Print the ENFDS step bound tau0 and the smallest admissible N");
  stability->add_option("--problem", stability_problem, "Built-in name or path to a problem JSON file")->capture_default_str();

  MlArgs ml_args;
  auto* ml = app.add_subcommand("ml", "Evaluate the Mittag-Leffler function E_{alpha,beta}(z)");
  ml->add_option("--alpha", ml_args.alpha)->required();
  ml->add_option("--beta", ml_args.beta)->required();
  ml->add_option("--z", ml_args.z)->required();
  ml->add_option("--tol", ml_args.tol, "Absolute term tolerance")->capture_default_str();
  ml->add_option("--max-terms", ml_args.max_terms)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*converge) return run_converge(conv_args);
    if (*stability) return run_stability(stability_problem);
    if (*ml) return run_ml(ml_args);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fracosc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fracosc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fracosc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitConfig;
}
