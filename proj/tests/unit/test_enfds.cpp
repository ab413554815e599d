#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fracosc/enfds.hpp"
#include "fracosc/error.hpp"
#include "fracosc/model.hpp"
#include "fracosc/special.hpp"

using namespace fracosc;

namespace {

// Residual form of the scheme evaluated with plain loops: the k-th equation
//   A sum_{j=0}^{k-1} a_j D2_{k-j} + B sum_{j=0}^{k-1} b_j D1_{k-j} + w_k x_k - f_k = 0
// is linear in x_{k+1}, so it is solved from two residual evaluations.
std::vector<double> residual_oracle(const OscillatorProblem& p, int n) {
  const double tau = p.horizon / n;
  const double big_a = std::pow(tau, -p.beta) / std::tgamma(3.0 - p.beta);
  const double big_b = p.lambda * std::pow(tau, -p.gamma_order) / std::tgamma(2.0 - p.gamma_order);
  auto a = [&](int j) { return std::pow(j + 1.0, 2.0 - p.beta) - std::pow(static_cast<double>(j), 2.0 - p.beta); };
  auto b = [&](int j) {
    return std::pow(j + 1.0, 1.0 - p.gamma_order) - std::pow(static_cast<double>(j), 1.0 - p.gamma_order);
  };
  std::vector<double> x(static_cast<std::size_t>(n) + 1, 0.0);
  x[0] = p.alpha1;
  x[1] = p.alpha1 + tau * p.alpha2;
  for (int k = 1; k < n; ++k) {
    const double t = p.horizon * k / n;
    auto residual = [&](double z) {
      x[static_cast<std::size_t>(k + 1)] = z;
      long double r = 0.0L;
      for (int j = 0; j <= k - 1; ++j) {
        const auto i = static_cast<std::size_t>(k - j);
        r += static_cast<long double>(big_a * a(j)) * (x[i + 1] - 2.0 * x[i] + x[i - 1]);
        r += static_cast<long double>(big_b * b(j)) * (x[i + 1] - x[i]);
      }
      r += p.omega(t) * x[static_cast<std::size_t>(k)] - p.forcing(t);
      return static_cast<double>(r);
    };
    const double r0 = residual(0.0);
    const double r1 = residual(1.0);
    x[static_cast<std::size_t>(k + 1)] = -r0 / (r1 - r0);
  }
  return x;
}

double max_abs_diff(const std::vector<double>& u, const std::vector<double>& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(u[i] - v[i]));
  return worst;
}

double max_abs(const std::vector<double>& u) {
  double worst = 0.0;
  for (double v : u) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace

TEST_CASE("power increment") {
  CHECK(power_increment(0.0, 0.2) == 1.0);
  CHECK(power_increment(0.0, 0.0) == 1.0);
  CHECK(power_increment(5.0, 0.0) == 0.0);
  CHECK(power_increment(3.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(power_increment(3.0, 2.0) == doctest::Approx(7.0).epsilon(1e-15));
  // large j: the naive difference loses digits, the increment must not
  const double j = 1e8;
  const double p = 0.2;
  const double expect = p * std::pow(j, p - 1.0) * (1.0 + (p - 1.0) / (2.0 * j));
  CHECK(power_increment(j, p) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("kernel telescopes and degenerates in the classical case") {
  const auto frac = builtin_problem("example1").problem;
  const UniformGrid grid(200, frac.horizon);
  const auto k = build_kernel(frac, grid);
  REQUIRE(k.a.size() == 200);
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t j = 0; j < k.a.size(); ++j) {
    sa += k.a[j];
    sb += k.b[j];
    if (j > 0) {
      CHECK(k.a[j] < k.a[j - 1]);
      CHECK(k.b[j] < k.b[j - 1]);
    }
  }
  CHECK(sa == doctest::Approx(std::pow(200.0, 0.2)).epsilon(1e-13));
  CHECK(sb == doctest::Approx(std::pow(200.0, 0.1)).epsilon(1e-13));
  CHECK(k.big_a == doctest::Approx(std::pow(0.005, -1.8) / fracosc::gamma(1.2)).epsilon(1e-14));
  CHECK(k.big_b == doctest::Approx(0.1 * std::pow(0.005, -0.9) / fracosc::gamma(1.1)).epsilon(1e-14));

  const auto classical = builtin_problem("example1_classical").problem;
  const auto kc = build_kernel(classical, UniformGrid(50, 1.0));
  CHECK(kc.a[0] == 1.0);
  CHECK(kc.b[0] == 1.0);
  for (std::size_t j = 1; j < kc.a.size(); ++j) {
    CHECK(kc.a[j] == 0.0);
    CHECK(kc.b[j] == 0.0);
  }
  CHECK(kc.big_a == doctest::Approx(2500.0).epsilon(1e-14));
}

TEST_CASE("stability threshold") {
  auto p = builtin_problem("example1").problem;
  CHECK(stability_threshold(p) == 1.0);
  p.lambda = 100.0;
  // mpmath: (Gamma(1.1) / (100 Gamma(1.2)))^(1/0.9)
  CHECK(stability_threshold(p) == doctest::Approx(0.006236042666603886).epsilon(1e-13));
  p.lambda = 0.0;
  CHECK(stability_threshold(p) == 1.0);
}

TEST_CASE("stability violation is reported with tau and tau0") {
  auto p = builtin_problem("example1").problem;
  p.lambda = 1000.0;
  try {
    (void)solve_enfds(p, UniformGrid(10, 1.0));
    FAIL("expected StabilityError");
  } catch (const StabilityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("tau = 0.1") != std::string::npos);
    CHECK(msg.find("tau0 = ") != std::string::npos);
    CHECK(e.step() == 0.1);
    CHECK(e.threshold() < 1e-3);
  }
  EnfdsOptions loose;
  loose.enforce_stability = false;
  CHECK_NOTHROW((void)solve_enfds(p, UniformGrid(10, 1.0), loose));
}

TEST_CASE("scheme matches a residual-form oracle") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto p = builtin_problem(name).problem;
    for (int n : {10, 37, 160}) {
      const auto sol = solve_enfds(p, UniformGrid(n, p.horizon));
      const auto ref = residual_oracle(p, n);
      CHECK(max_abs_diff(sol.x, ref) <= 1e-12 * std::max(1.0, max_abs(ref)));
    }
  }
}

TEST_CASE("classical limit is the standard central-difference scheme") {
  auto p = builtin_problem("example1_classical").problem;
  p.lambda = 0.7;
  p.omega = [](double t) { return 1.0 + t; };
  p.alpha1 = 0.3;
  p.alpha2 = -0.4;
  const int n = 400;
  const double tau = 1.0 / n;
  const auto sol = solve_enfds(p, UniformGrid(n, 1.0));
  std::vector<double> ref(n + 1);
  ref[0] = p.alpha1;
  ref[1] = p.alpha1 + tau * p.alpha2;
  for (int k = 1; k < n; ++k) {
    const double t = k * tau;
    // (x+ - 2x + x-)/tau^2 + lambda (x+ - x)/tau + w x = f
    ref[k + 1] = (p.forcing(t) - p.omega(t) * ref[k] + (2.0 * ref[k] - ref[k - 1]) / (tau * tau) +
                  p.lambda * ref[k] / tau) /
                 (1.0 / (tau * tau) + p.lambda / tau);
  }
  CHECK(max_abs_diff(sol.x, ref) < 1e-11);
}

TEST_CASE("constant solution of the free problem is preserved") {
  OscillatorProblem p;
  p.beta = 1.5;
  p.gamma_order = 0.5;
  p.lambda = 0.3;
  p.omega = [](double) { return 0.0; };
  p.forcing = [](double) { return 0.0; };
  p.alpha1 = 2.5;
  p.alpha2 = 0.0;
  const auto sol = solve_enfds(p, UniformGrid(64, 1.0));
  for (double v : sol.x) CHECK(v == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("initial step variants") {
  auto p = builtin_problem("example2_classical").problem;
  const auto taylor = solve_enfds(p, UniformGrid(20, 1.0));
  CHECK(taylor.x[1] == doctest::Approx(1.0 + 0.05));
  p.alpha1 = 0.5;
  p.alpha2 = 2.0;
  const auto transposed = solve_enfds(p, UniformGrid(20, 1.0), {true, InitialStep::transposed});
  CHECK(transposed.x[1] == doctest::Approx(2.0 + 0.05 * 0.5));
}

TEST_CASE("perturbation of the initial data stays bounded") {
  const double eps = 1e-8;
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto p = builtin_problem(name).problem;
    auto q = p;
    q.alpha1 += eps;
    q.alpha2 -= eps;
    const UniformGrid g(320, p.horizon);
    CHECK(max_abs_diff(solve_enfds(p, g).x, solve_enfds(q, g).x) <= 100.0 * eps);
  }
}

TEST_CASE("grid must span the problem horizon") {
  const auto p = builtin_problem("example1").problem;
  CHECK_THROWS_AS((void)solve_enfds(p, UniformGrid(10, 2.0)), InvalidArgument);
}

TEST_CASE("single-step grid returns the start-up values") {
  const auto p = builtin_problem("example2_classical").problem;
  const auto sol = solve_enfds(p, UniformGrid(1, 1.0));
  REQUIRE(sol.x.size() == 2);
  CHECK(sol.x[0] == 1.0);
  CHECK(sol.x[1] == 2.0);
}
