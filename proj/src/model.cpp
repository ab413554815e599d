#include "fracosc/model.hpp"

#include <cmath>

#include "fracosc/error.hpp"
#include "fracosc/special.hpp"

namespace fracosc {

void OscillatorProblem::validate() const {
  if (!(beta > 1.0 && beta <= 2.0)) throw InvalidArgument("problem: beta must lie in (1, 2]");
  if (!(gamma_order > 0.0 && gamma_order <= 1.0)) throw InvalidArgument("problem: gamma must lie in (0, 1]");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("problem: lambda must be finite and >= 0");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidArgument("problem: T must be finite and > 0");
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) throw InvalidArgument("problem: initial data must be finite");
  if (!omega) throw InvalidArgument("problem: omega(t) is not set");
  if (!forcing) throw InvalidArgument("problem: f(t) is not set");
}

UniformGrid::UniformGrid(int n_steps, double horizon) : n_steps_(n_steps), horizon_(horizon) {
  if (n_steps < 1) throw InvalidArgument("grid: number of steps must be >= 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidArgument("grid: horizon must be finite and > 0");
}

std::vector<double> UniformGrid::nodes() const {
  std::vector<double> t(static_cast<std::size_t>(n_steps_) + 1);
  for (int k = 0; k <= n_steps_; ++k) t[static_cast<std::size_t>(k)] = node(k);
  return t;
}

void check_grid(const OscillatorProblem& problem, const UniformGrid& grid) {
  if (std::abs(grid.horizon() - problem.horizon) > 1e-12 * problem.horizon) {
    throw InvalidArgument("grid horizon does not match the problem horizon");
  }
}

void ExactSolution::validate() const {
  if (const auto* aho = std::get_if<AhoSolution>(&kind)) {
    if (!(aho->delta > -aho->beta)) throw InvalidArgument("exact solution: AHO requires delta > -beta");
    if (!(aho->beta > 0.0)) throw InvalidArgument("exact solution: AHO requires beta > 0");
  } else if (!std::get<ExpressionSolution>(kind).fn) {
    throw InvalidArgument("exact solution: expression is not set");
  }
}

double evaluate_exact(const ExactSolution& sol, double t) {
  if (const auto* e = std::get_if<ExpressionSolution>(&sol.kind)) return e->fn(t);
  const auto& a = std::get<AhoSolution>(sol.kind);
  const double z = -std::pow(a.omega0 * t, a.beta);
  const double free_part = a.alpha1 * mittag_leffler({a.beta, 1.0}, z) + a.alpha2 * t * mittag_leffler({a.beta, 2.0}, z);
  if (a.mu_amp == 0.0) return free_part;
  const double shift = a.beta + a.delta;
  return free_part + a.mu_amp * std::pow(t, shift) * mittag_leffler({a.beta, shift + 1.0}, z);
}

TimeFunction cubic_forcing(double beta, double gamma_order, double lambda, double omega0) {
  const double stiffness = std::pow(omega0, beta);
  const double c_beta = 6.0 / gamma(4.0 - beta);
  const double c_gamma = 6.0 * lambda / gamma(4.0 - gamma_order);
  return [=](double t) {
    return stiffness * t * t * t + c_beta * std::pow(t, 3.0 - beta) + c_gamma * std::pow(t, 3.0 - gamma_order);
  };
}

namespace {

ProblemSpec cubic_example(std::string name, double beta, double gamma_order) {
  constexpr double lambda = 0.1;
  constexpr double omega0 = 1.0;
  OscillatorProblem p;
  p.beta = beta;
  p.gamma_order = gamma_order;
  p.lambda = lambda;
  const double stiffness = std::pow(omega0, beta);
  p.omega = [stiffness](double) { return stiffness; };
  p.forcing = cubic_forcing(beta, gamma_order, lambda, omega0);
  p.alpha1 = 0.0;
  p.alpha2 = 0.0;
  p.horizon = 1.0;
  ExactSolution exact{ExpressionSolution{[](double t) { return t * t * t; }, "t^3"}};
  return {std::move(name), std::move(p), std::move(exact)};
}

ProblemSpec aho_example(std::string name, double beta) {
  constexpr double delta = 0.3;
  constexpr double mu = 0.5;
  constexpr double omega0 = 2.0;
  OscillatorProblem p;
  p.beta = beta;
  p.gamma_order = 1.0;
  p.lambda = 0.0;
  const double stiffness = std::pow(omega0, beta);
  p.omega = [stiffness](double) { return stiffness; };
  const double amp = mu / gamma(1.0 + delta);
  p.forcing = [amp](double t) { return amp * std::pow(t, delta); };
  p.alpha1 = 1.0;
  p.alpha2 = 1.0;
  p.horizon = 1.0;
  ExactSolution exact{AhoSolution{delta, mu, omega0, p.alpha1, p.alpha2, beta}};
  return {std::move(name), std::move(p), std::move(exact)};
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"example1", "example1_classical", "example2_classical",
                                                 "example2_frac"};
  return names;
}

ProblemSpec builtin_problem(std::string_view name) {
  if (name == "example1") return cubic_example("example1", 1.8, 0.9);
  if (name == "example1_classical") return cubic_example("example1_classical", 2.0, 1.0);
  if (name == "example2_classical") return aho_example("example2_classical", 2.0);
  if (name == "example2_frac") return aho_example("example2_frac", 1.8);
  std::string valid;
  for (const auto& n : builtin_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown problem '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace fracosc
