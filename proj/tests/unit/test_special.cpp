#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "fracosc/error.hpp"
#include "fracosc/special.hpp"

using fracosc::MlParams;
using fracosc::mittag_leffler;

namespace {

// {x, Gamma(x)} from tests/oracles/gen_gamma_table.py.
const std::vector<std::pair<double, double>> kGammaOracle = {
#include "data/gamma_oracle.inc"
};

}  // namespace

TEST_CASE("gamma at known points") {
  CHECK(fracosc::gamma(1.0) == 1.0);
  CHECK(fracosc::gamma(5.0) == 24.0);
  CHECK(fracosc::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-15));
  // mpmath, 25 digits
  CHECK(std::abs(fracosc::gamma(2.2) / 1.101802490879712732769142 - 1.0) < 1e-14);
  CHECK(std::abs(fracosc::gamma(3.1) / 2.197620278392477054183565 - 1.0) < 1e-14);
}

TEST_CASE("gamma matches the high-precision table on (0, 50]") {
  REQUIRE(kGammaOracle.size() == 100);
  double worst = 0.0;
  for (const auto& [x, expected] : kGammaOracle) worst = std::max(worst, std::abs(fracosc::gamma(x) / expected - 1.0));
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma agrees with the C library across the reflection boundary") {
  for (double x = -4.75; x < 30.0; x += 0.3125) {
    if (x == std::floor(x) && x <= 0.0) continue;
    CHECK(std::abs(fracosc::gamma(x) / std::tgamma(x) - 1.0) < 1e-13);
  }
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS((void)fracosc::gamma(0.0), fracosc::DomainError);
  CHECK_THROWS_AS((void)fracosc::gamma(-1.0), fracosc::DomainError);
  CHECK_THROWS_AS((void)fracosc::gamma(-7.0), fracosc::DomainError);
  CHECK_THROWS_AS((void)fracosc::gamma(200.0), fracosc::OverflowError);
  CHECK_THROWS_AS((void)fracosc::gamma(std::nan("")), fracosc::DomainError);
}

TEST_CASE("Mittag-Leffler reduces to exp and cos") {
  CHECK(mittag_leffler({1.0, 1.0}, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK(std::abs(mittag_leffler({2.0, 1.0}, -std::pow(std::numbers::pi / 2.0, 2))) < 1e-10);

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ez(-5.0, 5.0);
  std::uniform_real_distribution<double> cz(0.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double z = ez(rng);
    CHECK(std::abs(mittag_leffler({1.0, 1.0}, z) - std::exp(z)) < 1e-10);
    const double w = cz(rng);
    CHECK(std::abs(mittag_leffler({2.0, 1.0}, -w * w) - std::cos(w)) < 1e-9);
  }
}

TEST_CASE("Mittag-Leffler at zero is 1 / Gamma(beta)") {
  CHECK(mittag_leffler({1.8, 2.1}, 0.0) == doctest::Approx(1.0 / fracosc::gamma(2.1)).epsilon(1e-15));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    CHECK(std::abs(mittag_leffler({a, b}, 0.0) - 1.0 / fracosc::gamma(b)) < 1e-15);
  }
}

TEST_CASE("Mittag-Leffler against the brute-force series oracle") {
  // mpmath series summed to 1e-35
  CHECK(std::abs(mittag_leffler({1.8, 1.0}, -1.5) - 0.2600543695831687540272885) < 1e-14);
}

TEST_CASE("Mittag-Leffler truncation is finite inside the working range") {
  for (double z = -10.0; z <= 10.0; z += 0.5) {
    int terms = 0;
    (void)mittag_leffler({1.8, 1.0}, z, terms);
    CHECK(terms > 0);
    CHECK(terms < 500);
  }
}

TEST_CASE("Mittag-Leffler errors") {
  CHECK_THROWS_AS((void)mittag_leffler({0.0, 1.0}, 1.0), fracosc::InvalidArgument);
  CHECK_THROWS_AS((void)mittag_leffler({1.0, -1.0}, 1.0), fracosc::InvalidArgument);
  CHECK_THROWS_AS((void)mittag_leffler({1.0, 1.0, 0.0}, 1.0), fracosc::InvalidArgument);
  CHECK_THROWS_AS((void)mittag_leffler({1.0, 1.0, 1e-15, 0}, 1.0), fracosc::InvalidArgument);
  CHECK_THROWS_AS((void)mittag_leffler({1.0, 1.0, 1e-15, 5}, 3.0), fracosc::ConvergenceError);
}
