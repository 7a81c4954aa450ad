#include "relab/expr/ast.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace relab::expr {

ParseError::ParseError(const std::string& msg, int line, int column)
    : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

EvalError::EvalError(const std::string& msg, Point at)
    : std::runtime_error(msg + " at " + format_point(at)), point_(std::move(at)) {}

namespace {

std::shared_ptr<Node> node(Op op) {
  auto n = std::make_shared<Node>();
  n->op = op;
  return n;
}

bool is_unary(Op op) { return op == Op::Neg || op == Op::Abs || op == Op::Sin; }
bool is_binary(Op op) { return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div; }
bool is_comparison(CondOp op) { return op <= CondOp::Gt; }

const char* symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    default: return "";
  }
}

const char* symbol(CondOp op) {
  switch (op) {
    case CondOp::Lt: return "<";
    case CondOp::Le: return "<=";
    case CondOp::Eq: return "=";
    case CondOp::Ge: return ">=";
    case CondOp::Gt: return ">";
    case CondOp::And: return "and";
    case CondOp::Or: return "or";
    case CondOp::Not: return "not";
  }
  return "";
}

}  // namespace

Ast constant(mpq_class v) {
  v.canonicalize();
  if (sgn(v) < 0) throw UsageError("constant must be non-negative; use Neg");
  auto n = node(Op::Const);
  n->value = v;
  return n;
}

Ast var(int index) {
  if (index < 1) throw UsageError("variable index must be >= 1");
  auto n = node(Op::Var);
  n->index = index;
  return n;
}

Ast unary(Op op, Ast a) {
  if (!is_unary(op)) throw UsageError("not a unary operator");
  auto n = node(op);
  n->args = {std::move(a)};
  return n;
}

Ast binary(Op op, Ast a, Ast b) {
  if (!is_binary(op)) throw UsageError("not a binary operator");
  auto n = node(op);
  n->args = {std::move(a), std::move(b)};
  return n;
}

Ast power(Ast base, int exponent) {
  if (exponent < 0) throw UsageError("exponent must be non-negative");
  auto n = node(Op::Pow);
  n->args = {std::move(base)};
  n->exponent = exponent;
  return n;
}

Ast call(Op op, std::vector<Ast> args) {
  if (op == Op::Min || op == Op::Max) {
    if (args.empty()) throw UsageError("min/max need at least one argument");
  } else if (op == Op::Abs || op == Op::Sin) {
    if (args.size() != 1) throw UsageError("abs/sin take one argument");
  } else {
    throw UsageError("not a function");
  }
  auto n = node(op);
  n->args = std::move(args);
  return n;
}

Ast if_then_else(CondPtr c, Ast then_branch, Ast else_branch) {
  auto n = node(Op::If);
  n->cond = std::move(c);
  n->args = {std::move(then_branch), std::move(else_branch)};
  return n;
}

CondPtr comparison(CondOp op, Ast lhs, Ast rhs) {
  if (!is_comparison(op)) throw UsageError("not a comparison");
  auto c = std::make_shared<Cond>();
  c->op = op;
  c->lhs = std::move(lhs);
  c->rhs = std::move(rhs);
  return c;
}

CondPtr logical(CondOp op, CondPtr a, CondPtr b) {
  if (op != CondOp::And && op != CondOp::Or) throw UsageError("not a connective");
  auto c = std::make_shared<Cond>();
  c->op = op;
  c->a = std::move(a);
  c->b = std::move(b);
  return c;
}

CondPtr negation(CondPtr a) {
  auto c = std::make_shared<Cond>();
  c->op = CondOp::Not;
  c->a = std::move(a);
  return c;
}

namespace {

// Nearest double; mpq get_d truncates. Numerator and denominator below 2^53 convert exactly,
// so one IEEE division rounds correctly.
double nearest(const mpq_class& q) {
  if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53)
    return q.get_num().get_d() / q.get_den().get_d();
  return q.get_d();
}

}  // namespace

double eval(const Ast& ast, const Point& p) {
  const Node& n = *ast;
  switch (n.op) {
    case Op::Const: return nearest(n.value);
    case Op::Var:
      if (n.index > static_cast<int>(p.size())) throw EvalError("x" + std::to_string(n.index) + " out of range", p);
      return p[n.index - 1];
    case Op::Neg: return -eval(n.args[0], p);
    case Op::Add: return eval(n.args[0], p) + eval(n.args[1], p);
    case Op::Sub: return eval(n.args[0], p) - eval(n.args[1], p);
    case Op::Mul: return eval(n.args[0], p) * eval(n.args[1], p);
    case Op::Div: {
      double num = eval(n.args[0], p), den = eval(n.args[1], p);
      if (den == 0.0) throw EvalError("division by zero", p);
      return num / den;
    }
    case Op::Pow: {
      double b = eval(n.args[0], p), r = 1.0;
      for (int k = 0; k < n.exponent; ++k) r *= b;
      return r;
    }
    case Op::Min:
    case Op::Max: {
      double r = eval(n.args[0], p);
      for (std::size_t k = 1; k < n.args.size(); ++k) {
        double v = eval(n.args[k], p);
        r = n.op == Op::Min ? std::min(r, v) : std::max(r, v);
      }
      return r;
    }
    case Op::Abs: return std::fabs(eval(n.args[0], p));
    case Op::Sin: return std::sin(eval(n.args[0], p));
    case Op::If: return holds(n.cond, p) ? eval(n.args[0], p) : eval(n.args[1], p);
  }
  return 0.0;
}

bool holds(const CondPtr& c, const Point& p) {
  switch (c->op) {
    case CondOp::And: return holds(c->a, p) && holds(c->b, p);
    case CondOp::Or: return holds(c->a, p) || holds(c->b, p);
    case CondOp::Not: return !holds(c->a, p);
    default: break;
  }
  double l = eval(c->lhs, p), r = eval(c->rhs, p);
  switch (c->op) {
    case CondOp::Lt: return l < r;
    case CondOp::Le: return l <= r;
    case CondOp::Eq: return l == r;
    case CondOp::Ge: return l >= r;
    default: return l > r;
  }
}

std::string format(const Ast& ast) {
  const Node& n = *ast;
  switch (n.op) {
    case Op::Const: return n.value.get_str();
    case Op::Var: return "x" + std::to_string(n.index);
    case Op::Neg: return "(-" + format(n.args[0]) + ")";
    case Op::Add:
    case Op::Sub:
    case Op::Mul: return "(" + format(n.args[0]) + symbol(n.op) + format(n.args[1]) + ")";
    case Op::Div: {
      std::string rhs = format(n.args[1]);
      if (std::isdigit(static_cast<unsigned char>(rhs.front()))) rhs = "(" + rhs + ")";
      return "(" + format(n.args[0]) + "/" + rhs + ")";
    }
    case Op::Pow: {
      std::string base = format(n.args[0]);
      if (n.args[0]->op == Op::Const && n.args[0]->value.get_den() != 1) base = "(" + base + ")";
      return "(" + base + "^" + std::to_string(n.exponent) + ")";
    }
    case Op::Min:
    case Op::Max: {
      std::string s = n.op == Op::Min ? "min(" : "max(";
      for (std::size_t k = 0; k < n.args.size(); ++k) s += (k ? "," : "") + format(n.args[k]);
      return s + ")";
    }
    case Op::Abs: return "abs(" + format(n.args[0]) + ")";
    case Op::Sin: return "sin(" + format(n.args[0]) + ")";
    case Op::If:
      return "(if " + format(n.cond) + " then " + format(n.args[0]) + " else " + format(n.args[1]) + ")";
  }
  return "";
}

std::string format(const CondPtr& c) {
  switch (c->op) {
    case CondOp::And:
    case CondOp::Or: return "(" + format(c->a) + " " + symbol(c->op) + " " + format(c->b) + ")";
    case CondOp::Not: return "(not " + format(c->a) + ")";
    default: return format(c->lhs) + symbol(c->op) + format(c->rhs);
  }
}

bool equal(const Ast& a, const Ast& b) {
  if (a->op != b->op || a->index != b->index || a->exponent != b->exponent || a->value != b->value) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t k = 0; k < a->args.size(); ++k)
    if (!equal(a->args[k], b->args[k])) return false;
  if (static_cast<bool>(a->cond) != static_cast<bool>(b->cond)) return false;
  return !a->cond || equal(a->cond, b->cond);
}

bool equal(const CondPtr& a, const CondPtr& b) {
  if (a->op != b->op) return false;
  if (is_comparison(a->op)) return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  if (a->op == CondOp::Not) return equal(a->a, b->a);
  return equal(a->a, b->a) && equal(a->b, b->b);
}

namespace {

int max_var(const CondPtr& c) {
  if (is_comparison(c->op)) return std::max(max_var(c->lhs), max_var(c->rhs));
  int m = max_var(c->a);
  return c->b ? std::max(m, max_var(c->b)) : m;
}

}  // namespace

int max_var(const Ast& ast) {
  int m = ast->op == Op::Var ? ast->index : 0;
  for (const Ast& a : ast->args) m = std::max(m, max_var(a));
  if (ast->cond) m = std::max(m, max_var(ast->cond));
  return m;
}

}  // namespace relab::expr
