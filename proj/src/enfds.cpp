#include "fracosc/enfds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracosc/error.hpp"
#include "fracosc/numeric.hpp"
#include "fracosc/special.hpp"

namespace fracosc {

double power_increment(double j, double p) {
  if (j == 0.0) return 1.0;
  return std::pow(j, p) * std::expm1(p * std::log1p(1.0 / j));
}

EnfdsKernel build_kernel(const OscillatorProblem& problem, const UniformGrid& grid) {
  problem.validate();
  const auto n = static_cast<std::size_t>(grid.n_steps());
  const double tau = grid.step();
  const double pa = 2.0 - problem.beta;
  const double pb = 1.0 - problem.gamma_order;

  EnfdsKernel k;
  k.a.resize(n);
  k.b.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    k.a[j] = power_increment(static_cast<double>(j), pa);
    k.b[j] = power_increment(static_cast<double>(j), pb);
  }
  k.big_a = std::pow(tau, -problem.beta) / gamma(3.0 - problem.beta);
  k.big_b = problem.lambda * std::pow(tau, -problem.gamma_order) / gamma(2.0 - problem.gamma_order);
  return k;
}

double stability_threshold(const OscillatorProblem& problem) {
  problem.validate();
  if (problem.lambda == 0.0) return 1.0;
  const double ratio = gamma(2.0 - problem.gamma_order) / (problem.lambda * gamma(3.0 - problem.beta));
  return std::min(1.0, std::pow(ratio, 1.0 / (problem.beta - problem.gamma_order)));
}

SolutionSeries solve_enfds(const OscillatorProblem& problem, const UniformGrid& grid, const EnfdsOptions& options) {
  problem.validate();
  const double tau = grid.step();
  check_grid(problem, grid);
  if (options.enforce_stability) {
    const double tau0 = stability_threshold(problem);
    if (tau > tau0) throw StabilityError(tau, tau0);
  }

  const int n = grid.n_steps();
  const EnfdsKernel kernel = build_kernel(problem, grid);
  const double big_a = kernel.big_a;
  const double big_b = kernel.big_b;
  const double denom = big_a + big_b;

  std::vector<double> x(static_cast<std::size_t>(n) + 1, 0.0);
  x[0] = problem.alpha1;
  x[1] = options.initial_step == InitialStep::taylor ? problem.alpha1 + tau * problem.alpha2
                                                     : problem.alpha2 + tau * problem.alpha1;

  for (int k = 1; k < n; ++k) {
    const double t = grid.node(k);
    const double omega_k = problem.omega(t);
    const double f_k = problem.forcing(t);

    CompensatedSum second;
    CompensatedSum first;
    for (int j = 1; j <= k - 1; ++j) {
      const auto i = static_cast<std::size_t>(k - j);
      second += kernel.a[static_cast<std::size_t>(j)] * (x[i + 1] - 2.0 * x[i] + x[i - 1]);
      first += kernel.b[static_cast<std::size_t>(j)] * (x[i + 1] - x[i]);
    }

    const auto kk = static_cast<std::size_t>(k);
    const double next = (f_k + (2.0 * big_a + big_b - omega_k) * x[kk] - big_a * x[kk - 1]) / denom -
                        (big_a / denom) * second.value() - (big_b / denom) * first.value();
    if (!std::isfinite(next)) {
      throw NonFiniteError("enfds: non-finite value at step " + std::to_string(k + 1));
    }
    x[kk + 1] = next;
  }
  return {grid, std::move(x), std::nullopt};
}

}  // namespace fracosc
