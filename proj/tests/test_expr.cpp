#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "papm/errors.hpp"
#include "papm/expr.hpp"

using papm::parse_expression;

namespace {
const std::vector<std::string> kXY{"x1", "x2"};
}

TEST_CASE("parser respects precedence and associativity") {
  auto v = [](const std::string& src, std::vector<double> p) {
    return parse_expression(src, kXY)->evaluate_value(p);
  };
  CHECK(v("1 + 2 * 3", {0, 0}) == doctest::Approx(7.0));
  CHECK(v("2 * x1^2", {3, 0}) == doctest::Approx(18.0));
  CHECK(v("-x1^2", {3, 0}) == doctest::Approx(-9.0));
  CHECK(v("(-x1)^2", {3, 0}) == doctest::Approx(9.0));
  CHECK(v("2^-2", {0, 0}) == doctest::Approx(0.25));
  CHECK(v("10 - 4 - 3", {0, 0}) == doctest::Approx(3.0));
  CHECK(v("12 / 4 / 3", {0, 0}) == doctest::Approx(1.0));
  CHECK(v("x1 - -x2", {1, 2}) == doctest::Approx(3.0));
  CHECK(v("pi", {0, 0}) == doctest::Approx(3.14159265358979323846));
  CHECK(v("e", {0, 0}) == doctest::Approx(2.71828182845904523536));
  CHECK(v("sin(pi / 2)", {0, 0}) == doctest::Approx(1.0));
  CHECK(v("  1+ x1   *x2 ", {2, 5}) == doctest::Approx(11.0));
}

TEST_CASE("parse errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_expression("x1 +", kXY), papm::SyntaxError);
  CHECK_THROWS_AS(parse_expression("(x1", kXY), papm::SyntaxError);
  CHECK_THROWS_AS(parse_expression("", kXY), papm::SyntaxError);
  CHECK_THROWS_AS(parse_expression("x1^x2", kXY), papm::NonLiteralExponent);
  CHECK_THROWS_AS(parse_expression("x1^2^2", kXY), papm::SyntaxError);
  CHECK_THROWS_AS(parse_expression("y1 + 1", kXY), papm::UnknownIdentifier);
  CHECK_THROWS_AS(parse_expression("foo(x1)", kXY), papm::UnknownIdentifier);

  try {
    parse_expression("x1 + @", kXY);
    FAIL("expected a syntax error");
  } catch (const papm::ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }

  try {
    parse_expression("x1^x2", kXY);
    FAIL("expected a literal-exponent error");
  } catch (const papm::NonLiteralExponent& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("print, clone and equals round-trip") {
  auto e = parse_expression("1 + sin(x1)^2 * cos(x2) - x1/x2", kXY);
  auto c = e->clone();
  CHECK(e->equals(*c));
  CHECK(e->to_string() == c->to_string());
  auto reparsed = parse_expression(e->to_string(), kXY);
  CHECK(e->equals(*reparsed));
  auto other = parse_expression("1 + sin(x1)^2 * cos(x2) - x2/x1", kXY);
  CHECK_FALSE(e->equals(*other));
}

TEST_CASE("jet and value evaluation paths agree") {
  const char* exprs[] = {
      "sin(x1) * cos(x2)",
      "exp(x1 / 2) + ln(1 + x2^2)",
      "sqrt(1 + x1^2) * tanh(x2)",
      "x1^3 - 2 / x2",
      "tan(x1 / 4) + pi * x2",
  };
  const std::vector<std::vector<double>> points{{0.3, 0.8}, {-1.1, 2.0},
                                                {1.9, -0.4}};
  for (const char* src : exprs) {
    auto e = parse_expression(src, kXY);
    for (const auto& p : points) {
      papm::Jet2 ad = e->evaluate_jet2(p);
      CHECK(ad.value == doctest::Approx(e->evaluate_value(p)).epsilon(1e-14));
      papm::Jet2 fd = papm::finite_difference_jet2(*e, p);
      for (int i = 0; i < 2; ++i)
        CHECK(ad.grad[i] == doctest::Approx(fd.grad[i]).epsilon(1e-7));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(ad.hess_at(i, j) ==
                doctest::Approx(fd.hess_at(i, j)).epsilon(1e-5));
    }
  }
}

TEST_CASE("evaluation failures surface as library errors") {
  auto e = parse_expression("ln(x1)", kXY);
  CHECK_THROWS_AS(e->evaluate_jet2({-1.0, 0.0}), papm::DomainError);
  auto d = parse_expression("1 / x1", kXY);
  CHECK_THROWS_AS(d->evaluate_jet2({0.0, 0.0}), papm::DomainError);
  auto big = parse_expression("exp(x1)", kXY);
  CHECK_THROWS_AS(big->evaluate_jet2({1000.0, 0.0}), papm::OverflowError);
}
