#include "fracosc/abm.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "fracosc/enfds.hpp"
#include "fracosc/error.hpp"
#include "fracosc/numeric.hpp"
#include "fracosc/special.hpp"

namespace fracosc {

AbmOrders reduce_to_system(const OscillatorProblem& problem) {
  problem.validate();
  const SplitPolicy policy = problem.split.value_or(problem.lambda == 0.0 ? SplitPolicy::undamped : SplitPolicy::general);
  AbmOrders orders;
  orders.policy = policy;
  if (policy == SplitPolicy::undamped) {
    if (problem.lambda != 0.0 && problem.gamma_order != 1.0) {
      throw InvalidArgument("abm: undamped split requires lambda = 0 or gamma = 1");
    }
    orders.sigma1 = 1.0;
    orders.sigma2 = problem.beta - 1.0;
  } else {
    orders.sigma1 = problem.gamma_order;
    orders.sigma2 = problem.beta - problem.gamma_order;
  }
  if (!(orders.sigma2 > 0.0 && orders.sigma2 <= 1.0)) {
    std::ostringstream os;
    os << "abm: beta - gamma = " << orders.sigma2
       << " lies outside (0, 1]; reducing such problems needs an additional equation, which is not implemented";
    throw UnsupportedOrderError(os.str());
  }
  return orders;
}

AbmWeights::AbmWeights(double sigma, int n_max) : sigma_(sigma), n_max_(n_max) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw InvalidArgument("abm weights: sigma must lie in (0, 1]");
  if (n_max < 0) throw InvalidArgument("abm weights: n_max must be >= 0");
  const auto size = static_cast<std::size_t>(n_max) + 1;
  theta_.resize(size);
  rho_.resize(size);
  // d(m) = (m+1)^(s+1) - m^(s+1); the interior corrector weight is d(m+1) - d(m).
  double d_prev = power_increment(0.0, sigma + 1.0);
  for (std::size_t m = 0; m < size; ++m) {
    theta_[m] = power_increment(static_cast<double>(m), sigma);
    const double d_next = power_increment(static_cast<double>(m + 1), sigma + 1.0);
    rho_[m] = d_next - d_prev;
    d_prev = d_next;
  }
}

double AbmWeights::theta(int j, int n) const {
  if (n < 0 || n > n_max_ || j < 0 || j > n) throw InvalidArgument("abm weights: theta index out of range");
  return theta_[static_cast<std::size_t>(n - j)];
}

double AbmWeights::rho(int j, int n) const {
  if (n < 0 || n > n_max_ || j < 0 || j > n + 1) throw InvalidArgument("abm weights: rho index out of range");
  if (j == n + 1) return 1.0;
  if (j == 0) {
    const double nd = n;
    return std::pow(nd, sigma_ + 1.0) - (nd - sigma_) * std::pow(nd + 1.0, sigma_);
  }
  return rho_[static_cast<std::size_t>(n - j)];
}

SolutionSeries solve_abm(const OscillatorProblem& problem, const UniformGrid& grid) {
  const AbmOrders orders = reduce_to_system(problem);
  check_grid(problem, grid);
  const int n_steps = grid.n_steps();
  const double tau = grid.step();
  const double s1 = orders.sigma1;
  const double s2 = orders.sigma2;
  const AbmWeights w1(s1, n_steps);
  const AbmWeights w2(s2, n_steps);

  const double pred1 = std::pow(tau, s1) / gamma(s1 + 1.0);
  const double pred2 = std::pow(tau, s2) / gamma(s2 + 1.0);
  const double corr1 = std::pow(tau, s1) / gamma(s1 + 2.0);
  const double corr2 = std::pow(tau, s2) / gamma(s2 + 2.0);

  const auto size = static_cast<std::size_t>(n_steps) + 1;
  std::vector<double> omega(size);
  std::vector<double> forcing(size);
  for (std::size_t k = 0; k < size; ++k) {
    const double t = grid.node(static_cast<int>(k));
    omega[k] = problem.omega(t);
    forcing[k] = problem.forcing(t);
  }

  std::vector<double> x(size, 0.0);
  std::vector<double> y(size, 0.0);
  std::vector<double> rhs(size, 0.0);  // f_j - lambda y_j - omega_j x_j
  x[0] = problem.alpha1;
  y[0] = problem.alpha2;
  rhs[0] = forcing[0] - problem.lambda * y[0] - omega[0] * x[0];

  for (int n = 0; n < n_steps; ++n) {
    CompensatedSum px;
    CompensatedSum py;
    CompensatedSum cx;
    CompensatedSum cy;
    for (int j = 0; j <= n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      px += w1.theta(j, n) * y[jj];
      py += w2.theta(j, n) * rhs[jj];
      cx += w1.rho(j, n) * y[jj];
      cy += w2.rho(j, n) * rhs[jj];
    }
    const double x_pred = x[0] + pred1 * px.value();
    const double y_pred = y[0] + pred2 * py.value();

    const auto next = static_cast<std::size_t>(n) + 1;
    const double rhs_pred = forcing[next] - problem.lambda * y_pred - omega[next] * x_pred;
    x[next] = x[0] + corr1 * (y_pred + cx.value());
    y[next] = y[0] + corr2 * (rhs_pred + cy.value());
    if (!std::isfinite(x[next]) || !std::isfinite(y[next])) {
      throw NonFiniteError("abm: non-finite value at step " + std::to_string(n + 1));
    }
    rhs[next] = forcing[next] - problem.lambda * y[next] - omega[next] * x[next];
  }
  return {grid, std::move(x), std::move(y)};
}

}  // namespace fracosc
