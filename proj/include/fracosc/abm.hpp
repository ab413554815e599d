#pragma once

#include <vector>

#include "fracosc/model.hpp"

namespace fracosc {

/// Orders of the first-order-in-time system D^sigma1 x = y, D^sigma2 y = f - lambda y - omega x.
struct AbmOrders {
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  SplitPolicy policy = SplitPolicy::general;
};

/// Split policy defaults to undamped when lambda = 0 and general otherwise.
/// Throws UnsupportedOrderError when an order falls outside (0, 1] (the
/// extra-equation reduction for {beta} > {gamma} is not implemented) and
/// InvalidArgument when the undamped split is requested for a problem with
/// a fractional damping term.
[[nodiscard]] AbmOrders reduce_to_system(const OscillatorProblem& problem);

/// Product-integration weights of the fractional Adams-Bashforth-Moulton method
/// for one order sigma in (0, 1], tabulated up to n_max steps. Indices follow
/// the step from t_n to t_{n+1}:
///   theta(j, n) = (n-j+1)^s - (n-j)^s                                  0 <= j <= n
///   rho(0, n)   = n^(s+1) - (n-s)(n+1)^s
///   rho(j, n)   = (n-j+2)^(s+1) + (n-j)^(s+1) - 2(n-j+1)^(s+1)      1 <= j <= n
///   rho(n+1, n) = 1
class AbmWeights {
 public:
  AbmWeights(double sigma, int n_max);

  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  [[nodiscard]] double theta(int j, int n) const;
  [[nodiscard]] double rho(int j, int n) const;

 private:
  double sigma_;
  int n_max_;
  std::vector<double> theta_;  // indexed by n - j
  std::vector<double> rho_;    // indexed by n - j, for 1 <= j <= n
};

/// PECE step with one corrector pass per step; O(N^2). The corrector for y
/// evaluates omega and f at t_{n+1} with the predicted x and y. Returns both
/// x and y. Throws UnsupportedOrderError or NonFiniteError.
[[nodiscard]] SolutionSeries solve_abm(const OscillatorProblem& problem, const UniformGrid& grid);

}  // namespace fracosc
