#pragma once

#include "relab/expr/ast.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace relab::expr {

// Random well-formed Asts over x1..x_dimension.
class AstFuzzer {
 public:
  AstFuzzer(std::uint64_t seed, int dimension) : rng_(seed), dim_(dimension) {}

  Ast ast(int depth) {
    int pick = depth <= 0 ? roll(2) : roll(12);
    switch (pick) {
      case 0: return constant(mpq_class(roll(40), 1 + roll(9)));
      case 1: return var(1 + roll(dim_));
      case 2: return unary(Op::Neg, ast(depth - 1));
      case 3: return binary(Op::Add, ast(depth - 1), ast(depth - 1));
      case 4: return binary(Op::Sub, ast(depth - 1), ast(depth - 1));
      case 5: return binary(Op::Mul, ast(depth - 1), ast(depth - 1));
      case 6: return binary(Op::Div, ast(depth - 1), ast(depth - 1));
      case 7: return power(ast(depth - 1), roll(5));
      case 8: {
        std::vector<Ast> args;
        for (int k = 0, n = 1 + roll(3); k < n; ++k) args.push_back(ast(depth - 1));
        return call(roll(2) ? Op::Min : Op::Max, std::move(args));
      }
      case 9: return call(Op::Abs, {ast(depth - 1)});
      case 10: return call(Op::Sin, {ast(depth - 1)});
      default: return if_then_else(cond(depth - 1), ast(depth - 1), ast(depth - 1));
    }
  }

  CondPtr cond(int depth) {
    static const CondOp rel[] = {CondOp::Lt, CondOp::Le, CondOp::Eq, CondOp::Ge, CondOp::Gt};
    int pick = depth <= 0 ? 0 : roll(4);
    if (pick == 0 || pick == 1) return comparison(rel[roll(5)], ast(depth - 1), ast(depth - 1));
    if (pick == 2) return logical(roll(2) ? CondOp::And : CondOp::Or, cond(depth - 1), cond(depth - 1));
    return negation(cond(depth - 1));
  }

 private:
  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
  int dim_;
};

}  // namespace relab::expr
