#pragma once

#include <vector>

#include "fracosc/model.hpp"

namespace fracosc {

/// Memory kernel of the explicit nonlocal scheme.
///   a_j = (j+1)^(2-beta) - j^(2-beta),  A = tau^-beta / Gamma(3-beta)
///   b_j = (j+1)^(1-gamma) - j^(1-gamma), B = lambda tau^-gamma / Gamma(2-gamma)
struct EnfdsKernel {
  std::vector<double> a;
  std::vector<double> b;
  double big_a = 0.0;
  double big_b = 0.0;
};

[[nodiscard]] EnfdsKernel build_kernel(const OscillatorProblem& problem, const UniformGrid& grid);

/// (j+1)^p - j^p without cancellation for large j.
[[nodiscard]] double power_increment(double j, double p);

/// tau0 = min(1, (Gamma(2-gamma) / (lambda Gamma(3-beta)))^(1/(beta-gamma))); 1 when lambda = 0.
[[nodiscard]] double stability_threshold(const OscillatorProblem& problem);

/// Start-up value for x_1.
enum class InitialStep {
  taylor,      // alpha1 + tau alpha2
  transposed,  // alpha2 + tau alpha1
};

struct EnfdsOptions {
  bool enforce_stability = true;
  InitialStep initial_step = InitialStep::taylor;
};

/// Explicit O(N^2) recurrence
///   x_{k+1} = [f_k + (2A + B - w_k) x_k - A x_{k-1}] / (A + B)
///           - A/(A+B) sum_{j=1}^{k-1} a_j (x_{k-j+1} - 2 x_{k-j} + x_{k-j-1})
///           - B/(A+B) sum_{j=1}^{k-1} b_j (x_{k-j+1} - x_{k-j}).
/// Throws StabilityError when enforcement is on and tau > tau0, NonFiniteError on blow-up.
[[nodiscard]] SolutionSeries solve_enfds(const OscillatorProblem& problem, const UniformGrid& grid,
                                         const EnfdsOptions& options = {});

}  // namespace fracosc
