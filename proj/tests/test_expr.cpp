#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fbelos/errors.hpp"
#include "fbelos/expr.hpp"
#include "oracles.hpp"

using namespace fbelos;
using namespace fbelos::expr;

namespace {

const std::vector<std::string> kCorpus = {
    "x - x^2",
    "sqrt(x - x^2)",
    "sin(pi*x)/pi",
    "2*(x - x^2)",
    "x*(1 - x)*(2 + (-1.5)*x)",
    "x*(1-x)*((x-0.5)^2+0.01)",
    "exp(x) - 1 - x*(e - 1)",
    "cos(x)^2 + tan(x/2)",
    "log(1 + x)*x^3",
    "2^x - 1",
    "x^x",
    "-x^2 + 3*x",
    "1.5e-3*x + 2E2*x^2",
    "((x))",
    "x - - - x",
};

// Random smooth expression text built only from the grammar.
std::string random_expression(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> coef(0.5, 3.0);
  if (depth == 0) {
    if (pick(rng) < 6) return "x";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", coef(rng));
    return buf;
  }
  const std::string a = random_expression(rng, depth - 1);
  const std::string b = random_expression(rng, depth - 1);
  switch (pick(rng)) {
    case 0: return "(" + a + " + " + b + ")";
    case 1: return "(" + a + " - " + b + ")";
    case 2: return "(" + a + " * " + b + ")";
    case 3: return "sin(" + a + ")";
    case 4: return "cos(" + a + ")";
    case 5: return "exp(sin(" + a + "))";
    case 6: return "(" + a + ")^2";
    case 7: return "(" + a + ")^3";
    case 8: return "sqrt(1 + (" + a + ")^2)";
    default: return a + "/(2 + sin(" + b + "))";
  }
}

std::vector<std::string> random_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(random_expression(rng, 3));
  return out;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  const ProfileExpr e = parse("x - x^2");
  const Node& r = e.root();
  REQUIRE(r.kind == NodeKind::Binary);
  CHECK(r.op == BinaryOp::Sub);
  CHECK(r.lhs->kind == NodeKind::Variable);
  REQUIRE(r.rhs->kind == NodeKind::Binary);
  CHECK(r.rhs->op == BinaryOp::Pow);
  CHECK(r.rhs->lhs->kind == NodeKind::Variable);
  CHECK(r.rhs->rhs->kind == NodeKind::Number);
  CHECK(r.rhs->rhs->number == 2.0);

  const ProfileExpr s = parse("sqrt(x - x^2)");
  REQUIRE(s.root().kind == NodeKind::Call);
  CHECK(s.root().function == Function::Sqrt);
  CHECK(structurally_equal(*s.root().lhs, r));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("1 + 2*x").serialize() == "(1 + (2 * x))");
  CHECK(parse("x^x^2").serialize() == "(x ^ (x ^ 2))");
  CHECK(parse("x^2^3").serialize() == "(x ^ 8)");
  CHECK(parse("-x^2").serialize() == "(-(x ^ 2))");
  CHECK(parse("x - x - x").serialize() == "((x - x) - x)");
  CHECK(parse("x/2/x").serialize() == "((x / 2) / x)");
}

TEST_CASE("consecutive unary minus") {
  const ProfileExpr two = parse("x - - x");
  REQUIRE(two.root().op == BinaryOp::Sub);
  CHECK(two.root().rhs->kind == NodeKind::Negate);
  CHECK(two.root().rhs->lhs->kind == NodeKind::Variable);
  CHECK(eval(two, 0.3) == doctest::Approx(0.6));

  const ProfileExpr three = parse("x - - - x");
  REQUIRE(three.root().op == BinaryOp::Sub);
  CHECK(three.root().rhs->kind == NodeKind::Negate);
  CHECK(three.root().rhs->lhs->kind == NodeKind::Negate);
  for (double x : {0.0, 0.25, 0.9}) CHECK(eval(three, x) == 0.0);
}

TEST_CASE("constant folding only combines literals") {
  CHECK(parse("2*3 + x").serialize() == "(6 + x)");
  CHECK(parse("-2").root().kind == NodeKind::Number);
  CHECK(parse("x*2*3").serialize() == "((x * 2) * 3)");
  CHECK(parse("pi*x").root().lhs->kind == NodeKind::Constant);
}

TEST_CASE("syntax errors carry offsets") {
  try {
    parse("x +");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse("2*(x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse("x $ 2");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse("foo(x)");
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name() == "foo");
    CHECK(e.offset() == 0);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("x x"), SyntaxError);
  CHECK_THROWS_AS(parse("+x"), SyntaxError);
  CHECK_THROWS_AS(parse("x\xc3\xa9"), SyntaxError);
}

TEST_CASE("eval examples") {
  CHECK(eval(parse("x - x^2"), 0.5) == 0.25);
  CHECK(eval(parse("sqrt(x - x^2)"), 0.0) == 0.0);
  CHECK(eval(parse("sin(pi*x)/pi"), 0.5) == doctest::Approx(1 / oracle::pi).epsilon(1e-15));
  CHECK(eval(parse("e"), 0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(eval_extended(parse("x - x^2"), 0.5L) == 0.25L);
}

TEST_CASE("eval raises DomainError") {
  CHECK_THROWS_AS(eval(parse("1/x"), 0.0), DomainError);
  CHECK_THROWS_AS(eval(parse("log(x)"), 0.0), DomainError);
  CHECK_THROWS_AS(eval(parse("sqrt(x - 1)"), 0.5), DomainError);
  CHECK_THROWS_AS(eval(parse("(x - 1)^0.5"), 0.5), DomainError);
  CHECK_THROWS_AS(eval(parse("x^(-1)"), 0.0), DomainError);
  CHECK_THROWS_AS(eval(parse("exp(x)"), 1000.0), DomainError);
  CHECK(eval(parse("(x - 1)^3"), 0.0) == -1.0);
}

TEST_CASE("eval never returns a non-finite value") {
  const std::vector<std::string> risky = {"1/(x - 0.5)", "log(x - 0.5)", "sqrt(x - 0.5)",
                                          "tan(pi*x)",   "(x - 0.5)^(-2)", "exp(1/x)"};
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& text : risky) {
    const ProfileExpr e = parse(text);
    for (int i = 0; i < 2000; ++i) {
      double x = unit(rng);
      if (i % 100 == 0) x = 0.5;
      double y = 0;
      try {
        y = eval(e, x);
      } catch (const DomainError&) {
        continue;
      }
      CHECK(std::isfinite(y));
    }
  }
}

TEST_CASE("differentiate examples") {
  CHECK(eval(differentiate(parse("x - x^2")), 0.0) == 1.0);
  CHECK(eval(differentiate(parse("2*(x - x^2)")), 1.0) == -2.0);
  CHECK(eval(differentiate(parse("sqrt(x - x^2)")), 0.5) == 0.0);
  CHECK_THROWS_AS(differentiate(parse("abs(x - 0.5)")), NonDifferentiable);
  CHECK(eval(parse("abs(x - 0.5)"), 0.25) == 0.25);
}

TEST_CASE("derivative pruning leaves no literal zero terms") {
  CHECK(differentiate(parse("x")).serialize() == "1");
  CHECK(differentiate(parse("3")).serialize() == "0");
  CHECK(differentiate(parse("2*x")).serialize() == "2");
  CHECK(differentiate(parse("x + 1")).serialize() == "1");
}

TEST_CASE("round trip through serialize") {
  auto all = kCorpus;
  for (const auto& s : random_corpus(11, 50)) all.push_back(s);
  for (const auto& text : all) {
    CAPTURE(text);
    const ProfileExpr once = parse(text);
    const ProfileExpr twice = parse(once.serialize());
    CHECK(once == twice);
    CHECK(twice.serialize() == once.serialize());
  }
}

TEST_CASE("symbolic derivative agrees with finite differences") {
  auto all = kCorpus;
  for (const auto& s : random_corpus(2024, 50)) all.push_back(s);
  std::size_t compared = 0;
  for (const auto& text : all) {
    CAPTURE(text);
    const ProfileExpr e = parse(text);
    ProfileExpr d = e;
    try {
      d = differentiate(e);
    } catch (const NonDifferentiable&) {
      continue;
    }
    const auto f = [&](double x) { return eval(e, x); };
    for (int i = 1; i <= 101; ++i) {
      const double x = i / 102.0;
      double symbolic = 0;
      try {
        symbolic = eval(d, x);
      } catch (const DomainError&) {
        continue;
      }
      const double numeric = oracle::richardson_derivative(f, x);
      CAPTURE(x);
      CHECK(std::fabs(symbolic - numeric) <= 1e-6 * (1 + std::fabs(symbolic)));
      ++compared;
    }
  }
  CHECK(compared > 6000);
}
