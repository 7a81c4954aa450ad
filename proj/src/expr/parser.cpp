#include "relab/expr/parser.hpp"

#include <cctype>

namespace relab::expr {

namespace {

enum class Tok { Int, Decimal, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
      if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        t.kind = Tok::Decimal;
      }
    } else if (std::isalpha(c)) {
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Ident;
    } else if ((c == '<' || c == '>') && i + 1 < text.size() && text[i + 1] == '=') {
      j += 2;
      t.kind = Tok::Sym;
    } else if (std::string("+-*/^(),<>=").find(static_cast<char>(c)) != std::string::npos) {
      j += 1;
      t.kind = Tok::Sym;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    t.text = text.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

mpq_class decimal_value(const std::string& s) {
  std::size_t dot = s.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(s, 10));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class den = 1;
  for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return q;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int dimension) : toks_(std::move(toks)), dimension_(dimension) {}

  Ast parse_all() {
    Ast a = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return a;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool is_sym(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).text == s;
  }
  bool is_word(const std::string& s) const { return peek().kind == Tok::Ident && peek().text == s; }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Tok::End ? "unexpected end of input" : msg, t.line, t.column);
  }
  void expect_sym(const std::string& s) {
    if (!is_sym(s)) fail("expected '" + s + "'");
    ++pos_;
  }
  void expect_word(const std::string& s) {
    if (!is_word(s)) fail("expected '" + s + "'");
    ++pos_;
  }

  Ast expr() {
    Ast a = term();
    while (is_sym("+") || is_sym("-")) {
      Op op = peek().text == "+" ? Op::Add : Op::Sub;
      ++pos_;
      a = binary(op, a, term());
    }
    return a;
  }

  Ast term() {
    Ast a = factor();
    while (is_sym("*") || is_sym("/")) {
      Op op = peek().text == "*" ? Op::Mul : Op::Div;
      ++pos_;
      a = binary(op, a, factor());
    }
    return a;
  }

  Ast factor() {
    if (is_sym("-")) {
      ++pos_;
      return unary(Op::Neg, factor());
    }
    Ast a = atom();
    if (is_sym("^")) {
      ++pos_;
      if (peek().kind != Tok::Int) fail("expected integer exponent");
      int e = std::stoi(peek().text);
      ++pos_;
      a = power(a, e);
    }
    return a;
  }

  Ast atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      mpq_class v(mpz_class(t.text, 10));
      ++pos_;
      if (is_sym("/") && peek(1).kind == Tok::Int) {
        mpz_class den(peek(1).text, 10);
        if (den == 0) fail("zero denominator");
        pos_ += 2;
        v = mpq_class(v.get_num(), den);
      }
      return constant(v);
    }
    if (t.kind == Tok::Decimal) {
      ++pos_;
      return constant(decimal_value(t.text));
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      ++pos_;
      Ast a = expr();
      expect_sym(")");
      return a;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "if") {
        ++pos_;
        CondPtr c = cond();
        expect_word("then");
        Ast a = expr();
        expect_word("else");
        Ast b = expr();
        return if_then_else(c, a, b);
      }
      if (t.text == "min" || t.text == "max" || t.text == "abs" || t.text == "sin") {
        Op op = t.text == "min" ? Op::Min : t.text == "max" ? Op::Max : t.text == "abs" ? Op::Abs : Op::Sin;
        const Token at = t;
        ++pos_;
        expect_sym("(");
        std::vector<Ast> args{expr()};
        while (is_sym(",")) {
          ++pos_;
          args.push_back(expr());
        }
        expect_sym(")");
        if ((op == Op::Abs || op == Op::Sin) && args.size() != 1)
          throw ParseError(at.text + " takes one argument", at.line, at.column);
        return call(op, std::move(args));
      }
      if (t.text.size() > 1 && t.text[0] == 'x' &&
          t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        int index = std::stoi(t.text.substr(1));
        if (index < 1 || index > dimension_)
          throw ParseError("variable " + t.text + " exceeds dimension " + std::to_string(dimension_), t.line,
                           t.column);
        ++pos_;
        return var(index);
      }
      fail("unknown identifier '" + t.text + "'");
    }
    fail("unexpected '" + t.text + "'");
  }

  CondPtr cond() {
    CondPtr a = cond_primary();
    if (is_word("and") || is_word("or")) {
      CondOp op = peek().text == "and" ? CondOp::And : CondOp::Or;
      ++pos_;
      return logical(op, a, cond());
    }
    return a;
  }

  CondPtr cond_primary() {
    if (is_word("not")) {
      ++pos_;
      return negation(cond());
    }
    if (is_sym("(")) {
      std::size_t save = pos_;
      try {
        ++pos_;
        CondPtr c = cond();
        expect_sym(")");
        return c;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    Ast lhs = expr();
    CondOp op;
    if (is_sym("<")) op = CondOp::Lt;
    else if (is_sym("<=")) op = CondOp::Le;
    else if (is_sym("=")) op = CondOp::Eq;
    else if (is_sym(">=")) op = CondOp::Ge;
    else if (is_sym(">")) op = CondOp::Gt;
    else fail("expected comparison operator");
    ++pos_;
    return comparison(op, lhs, expr());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int dimension_;
};

}  // namespace

Ast parse(const std::string& text, int dimension) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty expression", 1, 1);
  return Parser(lex(text), dimension).parse_all();
}

}  // namespace relab::expr
