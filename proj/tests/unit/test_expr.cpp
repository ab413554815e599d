#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

#include "expr_cases.hpp"
#include "fracosc/error.hpp"
#include "fracosc/expr.hpp"
#include "fracosc/special.hpp"

namespace ex = fracosc::expr;

TEST_CASE("grammar conformance") {
  for (const auto& c : expr_conformance_cases()) {
    CAPTURE(c.source);
    if (c.value) {
      CHECK(ex::parse(c.source).evaluate(c.t) == doctest::Approx(*c.value).epsilon(1e-15));
    } else {
      try {
        (void)ex::parse(c.source);
        FAIL("expected a parse error");
      } catch (const fracosc::ParseError& e) {
        CHECK(e.offset() == *c.error_at);
      }
    }
  }
}

TEST_CASE("power node shape") {
  const auto e = ex::parse("t^3");
  const auto* b = std::get_if<ex::Binary>(&e.root().kind);
  REQUIRE(b != nullptr);
  CHECK(b->op == ex::BinaryOp::power);
  CHECK(std::holds_alternative<ex::Variable>(b->lhs->kind));
  CHECK(std::get<ex::Number>(b->rhs->kind).value == 3.0);
}

TEST_CASE("unknown function is reported by name") {
  try {
    (void)ex::parse("log(t)");
    FAIL("expected a parse error");
  } catch (const fracosc::ParseError& e) {
    CHECK(std::string(e.what()).find("log") != std::string::npos);
    CHECK(e.offset() == 0);
  }
}

TEST_CASE("forcing of the cubic example") {
  const auto f = ex::parse("t^3 + 6*t^1.2/gamma(2.2) + 0.6*t^2.1/gamma(3.1)");
  const double expected = 1.0 + 6.0 / fracosc::gamma(2.2) + 0.6 / fracosc::gamma(3.1);
  CHECK(f.evaluate(1.0) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(std::abs(expected - 6.718644704281753696934042) < 1e-13);  // mpmath
  CHECK(ex::parse("6*t^1.2/gamma(2.2)").evaluate(1.0) == doctest::Approx(6.0 / 1.101802490879712732769142).epsilon(1e-14));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS((void)ex::parse("1/t").evaluate(0.0), fracosc::DomainError);
  CHECK_THROWS_AS((void)ex::parse("gamma(t - 1)").evaluate(1.0), fracosc::DomainError);
  CHECK_THROWS_AS((void)ex::parse("sqrt(-1)").evaluate(0.0), fracosc::NonFiniteError);
  CHECK_THROWS_AS((void)ex::parse("exp(t)").evaluate(1000.0), fracosc::NonFiniteError);
}

TEST_CASE("canonical printing is a parse fixpoint") {
  const char* sources[] = {"t^3 + 6*t^1.2/gamma(2.2) + 0.6*t^2.1/gamma(3.1)",
                           "-t^2 - -3",
                           "2^3^2",
                           "sin(cos(exp(sqrt(t))))",
                           "1e-5 * (t - 0.1) / 7",
                           "0.1 + 0.2"};
  for (const char* s : sources) {
    CAPTURE(s);
    const auto first = ex::parse(s);
    const auto printed = first.to_string();
    const auto second = ex::parse(printed);
    CHECK(first == second);
    CHECK(second.to_string() == printed);
  }
}

TEST_CASE("random polynomials match direct monomial evaluation") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> degree(0, 6);
  std::uniform_real_distribution<double> tdist(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::string src;
    std::vector<std::pair<int, int>> terms;
    const int count = 1 + trial % 5;
    for (int i = 0; i < count; ++i) {
      const int c = coef(rng);
      const int d = degree(rng);
      terms.emplace_back(c, d);
      if (!src.empty()) src += " + ";
      src += "(" + std::to_string(c) + ")*t^" + std::to_string(d);
    }
    const auto e = ex::parse(src);
    for (int k = 0; k < 5; ++k) {
      const double t = tdist(rng);
      double direct = 0.0;
      double scale = 0.0;
      for (const auto& [c, d] : terms) {
        direct += c * std::pow(t, d);
        scale += std::abs(c * std::pow(t, d));
      }
      CHECK(std::abs(e.evaluate(t) - direct) <= 1e-14 * std::max(1.0, scale));
    }
  }
}
