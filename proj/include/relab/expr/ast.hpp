#pragma once

#include "relab/core/errors.hpp"
#include "relab/core/point.hpp"

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace relab::expr {

enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Min, Max, Abs, Sin, If };
enum class CondOp { Lt, Le, Eq, Ge, Gt, And, Or, Not };

struct Node;
struct Cond;
using Ast = std::shared_ptr<const Node>;
using CondPtr = std::shared_ptr<const Cond>;

struct Node {
  Op op = Op::Const;
  mpq_class value;  // Const, never negative
  int index = 0;    // Var, 1-based
  int exponent = 0; // Pow
  std::vector<Ast> args;
  CondPtr cond;     // If: args = {then, else}
};

struct Cond {
  CondOp op = CondOp::Eq;
  Ast lhs, rhs;     // comparisons
  CondPtr a, b;     // And, Or (a, b) and Not (a)
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& msg, Point at);
  const Point& point() const { return point_; }

 private:
  Point point_;
};

Ast constant(mpq_class v);
Ast var(int index);
Ast unary(Op op, Ast a);
Ast binary(Op op, Ast a, Ast b);
Ast power(Ast base, int exponent);
Ast call(Op op, std::vector<Ast> args);
Ast if_then_else(CondPtr c, Ast then_branch, Ast else_branch);
CondPtr comparison(CondOp op, Ast lhs, Ast rhs);
CondPtr logical(CondOp op, CondPtr a, CondPtr b);
CondPtr negation(CondPtr a);

double eval(const Ast& ast, const Point& p);
bool holds(const CondPtr& c, const Point& p);

// Fully parenthesized; parse(format(a)) is structurally equal to a.
std::string format(const Ast& ast);
std::string format(const CondPtr& c);

bool equal(const Ast& a, const Ast& b);
bool equal(const CondPtr& a, const CondPtr& b);

// Largest Var index, 0 when there is none.
int max_var(const Ast& ast);

}  // namespace relab::expr
