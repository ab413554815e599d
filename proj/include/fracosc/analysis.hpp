#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracosc/enfds.hpp"
#include "fracosc/model.hpp"

namespace fracosc {

enum class Method { enfds, abm };
enum class ErrorRule { exact, runge };

[[nodiscard]] std::string_view method_name(Method m) noexcept;
[[nodiscard]] Method parse_method(std::string_view name);
[[nodiscard]] std::string_view rule_name(ErrorRule r) noexcept;
[[nodiscard]] ErrorRule parse_rule(std::string_view name);

struct SolveOptions {
  bool enforce_stability = true;
  InitialStep initial_step = InitialStep::taylor;
};

[[nodiscard]] SolutionSeries solve(Method method, const OscillatorProblem& problem, const UniformGrid& grid,
                                   const SolveOptions& options = {});

/// Approximation order used in the Runge denominator 2^mu - 1.
struct OrderSpec {
  double mu_order = 1.0;
};

/// ENFDS: 1. ABM: 1 + min(sigma1, sigma2) of the problem's system reduction.
[[nodiscard]] OrderSpec order_spec(Method method, const OscillatorProblem& problem);

/// max_j |x(t_j) - x_j| over all grid nodes.
[[nodiscard]] double exact_error(const SolutionSeries& sol, const ExactSolution& exact);

/// Double-recalculation estimate max_i |coarse_i - fine_{2i}| / (2^mu - 1) over every
/// coarse node. Throws GridMismatchError unless fine has exactly twice the steps.
[[nodiscard]] double runge_error(const SolutionSeries& coarse, const SolutionSeries& fine, const OrderSpec& spec);

/// p = log(xi1 / xi2) / log(tau1 / tau2). Throws DomainError on non-positive inputs or tau1 == tau2.
[[nodiscard]] double computational_order(double xi1, double tau1, double xi2, double tau2);

struct ConvergenceRow {
  int n_steps = 0;
  double step = 0.0;
  std::optional<double> xi;
  std::optional<double> p;
  std::string note;  // set when this rung failed or its order is undefined
};

struct ConvergenceReport {
  Method method = Method::enfds;
  ErrorRule rule = ErrorRule::exact;
  double mu_order = 1.0;  // only meaningful for the Runge rule
  std::vector<ConvergenceRow> rows;
};

struct LadderOptions {
  SolveOptions solve;
  int jobs = 1;
};

/// Throws InvalidArgument unless the list is non-empty, positive and doubles entry to entry.
void validate_ladder(const std::vector<int>& n_list);

/// One report per method with a row per N. Solver failures on a rung are
/// recorded in the row note rather than aborting the ladder. Rungs run on up
/// to `jobs` threads; the result does not depend on the thread count.
[[nodiscard]] std::vector<ConvergenceReport> convergence_ladder(const OscillatorProblem& problem,
                                                                const std::optional<ExactSolution>& exact,
                                                                const std::vector<Method>& methods,
                                                                const std::vector<int>& n_list, ErrorRule rule,
                                                                const LadderOptions& options = {});

/// 10 significant digits, plain decimal for magnitudes in [1e-9, 1e12), scientific otherwise.
[[nodiscard]] std::string format_number(double v);

/// Header N,tau,xi_<method>,p_<method>,... (Runge columns are xi_runge_<method>),
/// rows in ascending N, '-' for absent values.
void write_report_csv(std::ostream& out, const std::vector<ConvergenceReport>& reports);
void write_report_json(std::ostream& out, const std::vector<ConvergenceReport>& reports);

}  // namespace fracosc
