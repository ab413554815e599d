#include "fracosc/analysis.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>
#include <utility>

#include "json.hpp"

#include "fracosc/abm.hpp"
#include "fracosc/error.hpp"

namespace fracosc {

std::string_view method_name(Method m) noexcept { return m == Method::enfds ? "enfds" : "abm"; }

Method parse_method(std::string_view name) {
  if (name == "enfds") return Method::enfds;
  if (name == "abm") return Method::abm;
  throw InvalidArgument("unknown method '" + std::string(name) + "'; valid methods: enfds, abm");
}

std::string_view rule_name(ErrorRule r) noexcept { return r == ErrorRule::exact ? "exact" : "runge"; }

ErrorRule parse_rule(std::string_view name) {
  if (name == "exact") return ErrorRule::exact;
  if (name == "runge") return ErrorRule::runge;
  throw InvalidArgument("unknown rule '" + std::string(name) + "'; valid rules: exact, runge");
}

SolutionSeries solve(Method method, const OscillatorProblem& problem, const UniformGrid& grid,
                     const SolveOptions& options) {
  if (method == Method::enfds) return solve_enfds(problem, grid, {options.enforce_stability, options.initial_step});
  return solve_abm(problem, grid);
}

OrderSpec order_spec(Method method, const OscillatorProblem& problem) {
  if (method == Method::enfds) return {1.0};
  const AbmOrders orders = reduce_to_system(problem);
  return {1.0 + std::min(orders.sigma1, orders.sigma2)};
}

double exact_error(const SolutionSeries& sol, const ExactSolution& exact) {
  double worst = 0.0;
  for (int j = 0; j <= sol.grid.n_steps(); ++j) {
    const double diff = std::abs(evaluate_exact(exact, sol.grid.node(j)) - sol.x[static_cast<std::size_t>(j)]);
    worst = std::max(worst, diff);
  }
  return worst;
}

double runge_error(const SolutionSeries& coarse, const SolutionSeries& fine, const OrderSpec& spec) {
  if (fine.grid.n_steps() != 2 * coarse.grid.n_steps()) {
    throw GridMismatchError("runge_error: fine grid must have exactly twice the coarse steps (got " +
                            std::to_string(coarse.grid.n_steps()) + " and " + std::to_string(fine.grid.n_steps()) +
                            ")");
  }
  if (coarse.grid.horizon() != fine.grid.horizon()) throw GridMismatchError("runge_error: horizons differ");
  if (!(spec.mu_order > 0.0)) throw InvalidArgument("runge_error: mu must be > 0");
  double worst = 0.0;
  for (int i = 0; i <= coarse.grid.n_steps(); ++i) {
    const double diff = std::abs(coarse.x[static_cast<std::size_t>(i)] - fine.x[static_cast<std::size_t>(2 * i)]);
    worst = std::max(worst, diff);
  }
  return worst / (std::exp2(spec.mu_order) - 1.0);
}

double computational_order(double xi1, double tau1, double xi2, double tau2) {
  if (!(xi1 > 0.0) || !(xi2 > 0.0)) throw DomainError("computational_order: errors must be positive");
  if (!(tau1 > 0.0) || !(tau2 > 0.0)) throw DomainError("computational_order: steps must be positive");
  if (tau1 == tau2) throw DomainError("computational_order: steps must differ");
  return std::log(xi1 / xi2) / std::log(tau1 / tau2);
}

void validate_ladder(const std::vector<int>& n_list) {
  if (n_list.empty()) throw InvalidArgument("ladder: list of N is empty");
  if (n_list.front() < 1) throw InvalidArgument("ladder: N must be >= 1");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] != 2 * n_list[i - 1]) {
      throw InvalidArgument("ladder: N must double from entry to entry (" + std::to_string(n_list[i - 1]) +
                            " -> " + std::to_string(n_list[i]) + ")");
    }
  }
}

namespace {

struct Rung {
  Method method;
  int n;
  std::optional<SolutionSeries> solution;
  std::string error;
};

void run_rungs(const OscillatorProblem& problem, std::vector<Rung>& rungs, const LadderOptions& options) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < rungs.size(); i = next.fetch_add(1)) {
      Rung& r = rungs[i];
      try {
        r.solution = solve(r.method, problem, UniformGrid(r.n, problem.horizon), options.solve);
      } catch (const Error& e) {
        r.error = e.what();
      }
    }
  };
  const auto jobs = static_cast<std::size_t>(std::clamp(options.jobs, 1, 256));
  if (jobs == 1 || rungs.size() < 2) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(jobs, rungs.size()); ++t) pool.emplace_back(worker);
}

}  // namespace

std::vector<ConvergenceReport> convergence_ladder(const OscillatorProblem& problem,
                                                  const std::optional<ExactSolution>& exact,
                                                  const std::vector<Method>& methods, const std::vector<int>& n_list,
                                                  ErrorRule rule, const LadderOptions& options) {
  problem.validate();
  validate_ladder(n_list);
  if (methods.empty()) throw InvalidArgument("ladder: no methods requested");
  if (rule == ErrorRule::exact && !exact) throw InvalidArgument("ladder: exact rule needs an exact solution");

  std::vector<int> needed = n_list;
  if (rule == ErrorRule::runge) needed.push_back(2 * n_list.back());

  std::vector<Rung> rungs;
  for (const Method m : methods) {
    for (const int n : needed) rungs.push_back({m, n, std::nullopt, {}});
  }
  run_rungs(problem, rungs, options);

  std::vector<ConvergenceReport> reports;
  std::size_t base = 0;
  for (const Method m : methods) {
    ConvergenceReport report;
    report.method = m;
    report.rule = rule;
    std::optional<OrderSpec> spec;
    std::string spec_error;
    try {
      spec = order_spec(m, problem);
      report.mu_order = spec->mu_order;
    } catch (const Error& e) {
      spec_error = e.what();
    }

    for (std::size_t i = 0; i < n_list.size(); ++i) {
      const Rung& r = rungs[base + i];
      ConvergenceRow row;
      row.n_steps = r.n;
      row.step = problem.horizon / r.n;
      try {
        if (!r.solution) throw Error(r.error);
        if (rule == ErrorRule::exact) {
          row.xi = exact_error(*r.solution, *exact);
        } else {
          const Rung& fine = rungs[base + i + 1];
          if (!fine.solution) throw Error("N=" + std::to_string(fine.n) + ": " + fine.error);
          if (!spec) throw Error(spec_error);
          row.xi = runge_error(*r.solution, *fine.solution, *spec);
        }
      } catch (const Error& e) {
        row.note = e.what();
      }
      if (!report.rows.empty()) {
        const ConvergenceRow& prev = report.rows.back();
        if (prev.xi && row.xi) {
          try {
            row.p = computational_order(*prev.xi, prev.step, *row.xi, row.step);
          } catch (const DomainError& e) {
            if (row.note.empty()) row.note = e.what();
          }
        }
      }
      report.rows.push_back(std::move(row));
    }
    reports.push_back(std::move(report));
    base += needed.size();
  }
  return reports;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  const double mag = std::abs(v);
  if (v == 0.0) return "0";
  if (mag >= 1e-9 && mag < 1e12) {
    const int exponent = static_cast<int>(std::floor(std::log10(mag)));
    const int decimals = std::max(0, 9 - exponent);
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
    std::string s = buf.data();
    // Rounding can carry into a new leading digit; one extra trailing digit is harmless but trim zeros.
    if (s.find('.') != std::string::npos) {
      while (!s.empty() && s.back() == '0') s.pop_back();
      if (!s.empty() && s.back() == '.') s.pop_back();
    }
    return s;
  }
  std::snprintf(buf.data(), buf.size(), "%.9e", v);
  return buf.data();
}

namespace {

void check_same_ladder(const std::vector<ConvergenceReport>& reports) {
  if (reports.empty()) throw InvalidArgument("report: nothing to write");
  for (const auto& r : reports) {
    if (r.rows.size() != reports.front().rows.size()) throw InvalidArgument("report: ladders differ in length");
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (r.rows[i].n_steps != reports.front().rows[i].n_steps) throw InvalidArgument("report: ladders differ in N");
    }
  }
}

std::string xi_column(const ConvergenceReport& r) {
  return (r.rule == ErrorRule::exact ? "xi_" : "xi_runge_") + std::string(method_name(r.method));
}

std::string opt_text(const std::optional<double>& v) { return v ? format_number(*v) : "-"; }

// Rounded to the CSV's 10 significant digits so both formats carry the same values.
nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return std::stod(format_number(*v));
}

}  // namespace

void write_report_csv(std::ostream& out, const std::vector<ConvergenceReport>& reports) {
  check_same_ladder(reports);
  out << "N,tau";
  for (const auto& r : reports) out << ',' << xi_column(r) << ",p_" << method_name(r.method);
  out << '\n';
  const auto& front = reports.front().rows;
  for (std::size_t i = 0; i < front.size(); ++i) {
    out << front[i].n_steps << ',' << format_number(front[i].step);
    for (const auto& r : reports) out << ',' << opt_text(r.rows[i].xi) << ',' << opt_text(r.rows[i].p);
    out << '\n';
  }
}

void write_report_json(std::ostream& out, const std::vector<ConvergenceReport>& reports) {
  check_same_ladder(reports);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const auto& front = reports.front().rows;
  for (std::size_t i = 0; i < front.size(); ++i) {
    nlohmann::ordered_json row;
    row["N"] = front[i].n_steps;
    row["tau"] = std::stod(format_number(front[i].step));
    for (const auto& r : reports) {
      const auto& cell = r.rows[i];
      row[xi_column(r)] = opt_json(cell.xi);
      row["p_" + std::string(method_name(r.method))] = opt_json(cell.p);
      if (!cell.note.empty()) row["note_" + std::string(method_name(r.method))] = cell.note;
    }
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

}  // namespace fracosc
