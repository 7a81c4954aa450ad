#include "ast_fuzzer.hpp"
#include "relab/expr/ast.hpp"
#include "relab/expr/parser.hpp"

#include <doctest.h>

#include <cmath>

using namespace relab;
using namespace relab::expr;

namespace {

double at(const std::string& text, const Point& p) { return eval(parse(text, static_cast<int>(p.size())), p); }

}  // namespace

TEST_CASE("precedence") {
  CHECK(at("2+3*4", {0}) == 14);
  CHECK(at("-x1^2", {2}) == -4);
  CHECK(at("x1*x2/(x1^2+x2^2)", {3, 1}) == doctest::Approx(0.3));
  CHECK(at("2^3*2", {0}) == 16);
  CHECK(at("8/4/2", {0}) == 1);
  CHECK(at("5-3-1", {0}) == 1);
  CHECK(at("- -3", {0}) == 3);
}

TEST_CASE("gp formula with the origin convention") {
  const std::string f = "if x1=0 and x2=0 then 0 else x1*x2/(x1^2+x2^2)";
  CHECK(at(f, {1, 1}) == 0.5);
  CHECK(at(f, {3, 1}) == doctest::Approx(0.3));
  CHECK(at(f, {0, 0}) == 0);
}

TEST_CASE("piecewise step") {
  const std::string f = "if x1+x2<1 then 0 else if x1+x2=1 then 4/5 else 1";
  CHECK(at(f, {0.6, 0.5}) == 1);
  CHECK(at(f, {0.5, 0.5}) == 0.8);
  CHECK(at(f, {0.2, 0.5}) == 0);
}

TEST_CASE("functions and literals") {
  Ast m = parse("min(x1,x2,x3)", 3);
  CHECK(m->op == Op::Min);
  REQUIRE(m->args.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(m->args[i]->op == Op::Var);
    CHECK(m->args[i]->index == i + 1);
  }
  CHECK(format(parse("min(x1,x2)", 2)) == "min(x1,x2)");
  CHECK(format(constant(mpq_class(1, 3))) == "1/3");
  CHECK(at("0.25+1/4", {0}) == 0.5);
  CHECK(at("abs(-2)+max(1,x1)", {3}) == 5);
  CHECK(at("sin(0)", {0}) == 0);
  CHECK(at("if not x1<1 then 0 else 1", {2}) == 0);
  CHECK(at("if not x1<1 and x1>5 then 0 else 1", {2}) == 0);  // not (x1<1 and x1>5)
  CHECK(at("010+0.025", {0}) == 10.025);
}

TEST_CASE("round trip of the gp formula") {
  Ast a = parse("x1*x2/(x1^2+x2^2)", 2);
  CHECK(equal(parse(format(a), 2), a));
}

TEST_CASE("fuzzed round trips are exact") {
  AstFuzzer fuzz(2024, 3);
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    Ast a = fuzz.ast(1 + k % 5);
    std::string text = format(a);
    Ast b = parse(text, 3);
    if (!equal(a, b) || format(b) != text) {
      ++failures;
      MESSAGE("round trip mismatch: " << text);
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("errors carry positions") {
  try {
    parse("x1+", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  try {
    parse("x1 +\n  foo", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse("x3", 2), ParseError);
  CHECK_THROWS_AS(parse("", 2), ParseError);
  CHECK_THROWS_AS(parse("(x1", 2), ParseError);
  CHECK_THROWS_AS(parse("x1^x2", 2), ParseError);
  CHECK_THROWS_AS(parse("min()", 2), ParseError);
}

TEST_CASE("division by zero reports the point") {
  Ast a = parse("1/(x1-x2)", 2);
  try {
    eval(a, {1, 1});
    FAIL("expected an evaluation error");
  } catch (const EvalError& e) {
    CHECK(e.point() == Point{1, 1});
  }
}

TEST_CASE("max_var") {
  CHECK(max_var(parse("x1+x3*2", 3)) == 3);
  CHECK(max_var(parse("7", 3)) == 0);
}
