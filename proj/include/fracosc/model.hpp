#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fracosc {

using TimeFunction = std::function<double(double)>;

/// How the ABM solver splits the second-order problem into two equations
/// D^s1 x = y, D^s2 y = f - lambda y - omega x.
///   general:  (s1, s2) = (gamma, beta - gamma)
///   undamped: (s1, s2) = (1, beta - 1), valid when lambda = 0 or gamma = 1
enum class SplitPolicy { general, undamped };

/// Cauchy problem
///   D^beta x + lambda D^gamma x + omega(t) x = f(t),  x(0) = alpha1, x'(0) = alpha2
/// on [0, horizon], both derivatives in the Gerasimov-Caputo sense.
struct OscillatorProblem {
  double beta = 2.0;         // (1, 2]
  double gamma_order = 1.0;  // (0, 1]
  double lambda = 0.0;       // friction, >= 0
  TimeFunction omega;
  TimeFunction forcing;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double horizon = 1.0;
  std::optional<SplitPolicy> split;

  /// Throws InvalidArgument if any invariant is violated.
  void validate() const;
};

/// N equal steps over [0, T]; nodes t_k = k T / N, so the last node is exactly T.
class UniformGrid {
 public:
  UniformGrid(int n_steps, double horizon);

  [[nodiscard]] int n_steps() const noexcept { return n_steps_; }
  [[nodiscard]] double horizon() const noexcept { return horizon_; }
  [[nodiscard]] double step() const noexcept { return horizon_ / n_steps_; }
  [[nodiscard]] double node(int k) const noexcept { return horizon_ * k / n_steps_; }
  [[nodiscard]] std::vector<double> nodes() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  int n_steps_;
  double horizon_;
};

/// Throws InvalidArgument unless the grid spans [0, problem.horizon].
void check_grid(const OscillatorProblem& problem, const UniformGrid& grid);

struct SolutionSeries {
  UniformGrid grid;
  std::vector<double> x;
  std::optional<std::vector<double>> y;  // auxiliary ABM variable
};

/// Exact solution of the undamped analogue of the harmonic oscillator,
///   x(t) = a1 E_{b,1}(-(w0 t)^b) + a2 t E_{b,2}(-(w0 t)^b) + mu t^(b+d) E_{b,b+d+1}(-(w0 t)^b),
/// for forcing mu t^d / Gamma(1 + d) and omega = w0^b.
struct AhoSolution {
  double delta = 0.0;
  double mu_amp = 0.0;
  double omega0 = 1.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 2.0;
};

struct ExpressionSolution {
  TimeFunction fn;
  std::string text;
};

struct ExactSolution {
  std::variant<ExpressionSolution, AhoSolution> kind;

  /// Throws InvalidArgument when an AHO solution has delta <= -beta.
  void validate() const;
};

[[nodiscard]] double evaluate_exact(const ExactSolution& sol, double t);

/// A problem together with its exact solution when one is known.
struct ProblemSpec {
  std::string name;
  OscillatorProblem problem;
  std::optional<ExactSolution> exact;
};

/// Forcing that makes x(t) = t^3 the exact solution for constant omega = omega0^beta:
///   omega0^beta t^3 + 6 t^(3-beta) / Gamma(4-beta) + 6 lambda t^(3-gamma) / Gamma(4-gamma).
[[nodiscard]] TimeFunction cubic_forcing(double beta, double gamma_order, double lambda, double omega0);

[[nodiscard]] const std::vector<std::string>& builtin_names();

/// One of example1, example1_classical, example2_classical, example2_frac.
/// Throws InvalidArgument listing the valid names otherwise.
[[nodiscard]] ProblemSpec builtin_problem(std::string_view name);

/// Problem file (JSON):
///   { "beta", "gamma", "lambda", "omega": expr, "f": expr, "alpha1", "alpha2", "T",
///     "exact": expr | {"kind": "aho", "delta", "mu", "omega0"} (optional) }
/// Expressions follow the grammar in expr.hpp. Throws InvalidArgument or ParseError.
[[nodiscard]] ProblemSpec parse_problem_json(std::string_view text, std::string name = "file");
[[nodiscard]] ProblemSpec load_problem_file(const std::string& path);

}  // namespace fracosc
