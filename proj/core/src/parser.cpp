#include "qtrop/parser.hpp"

#include <cctype>

namespace qtrop {

namespace {

struct Token {
  enum class Kind { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen,
                    RParen, End };
  Kind kind;
  Integer value;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
        ++j;
      tok_.kind = Token::Kind::Integer;
      tok_.value = Integer(s_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_.kind = Token::Kind::Name;
      tok_.text = s_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    ++i_;
    switch (c) {
      case '+': tok_.kind = Token::Kind::Plus; return;
      case '-': tok_.kind = Token::Kind::Minus; return;
      case '*': tok_.kind = Token::Kind::Star; return;
      case '/': tok_.kind = Token::Kind::Slash; return;
      case '^': tok_.kind = Token::Kind::Caret; return;
      case '(': tok_.kind = Token::Kind::LParen; return;
      case ')': tok_.kind = Token::Kind::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         i_ - 1);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

ExprPtr node(ExprNode::Kind k, std::size_t pos) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->pos = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().kind != Token::Kind::End)
      throw ParseError("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      const auto k = lex_.peek().kind;
      if (k != Token::Kind::Plus && k != Token::Kind::Minus) break;
      const Token op = lex_.take();
      ExprPtr n = node(k == Token::Kind::Plus ? ExprNode::Kind::Add
                                              : ExprNode::Kind::Sub,
                       op.pos);
      n->children = {lhs, term()};
      lhs = n;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      const auto k = lex_.peek().kind;
      if (k != Token::Kind::Star && k != Token::Kind::Slash) break;
      const Token op = lex_.take();
      ExprPtr n = node(k == Token::Kind::Star ? ExprNode::Kind::Mul
                                              : ExprNode::Kind::Div,
                       op.pos);
      n->children = {lhs, factor()};
      lhs = n;
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    if (lex_.peek().kind == Token::Kind::Caret) {
      const Token op = lex_.take();
      ExprPtr n = node(ExprNode::Kind::Pow, op.pos);
      n->exponent = exponent();
      n->children = {base};
      return n;
    }
    return base;
  }

  int exponent() {
    bool neg = false;
    bool paren = false;
    if (lex_.peek().kind == Token::Kind::LParen) {
      paren = true;
      lex_.take();
    }
    if (lex_.peek().kind == Token::Kind::Minus) {
      neg = true;
      lex_.take();
    }
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Integer)
      throw ParseError("expected integer exponent", t.pos);
    lex_.take();
    if (paren) {
      if (lex_.peek().kind != Token::Kind::RParen)
        throw ParseError("expected ')' after exponent", lex_.peek().pos);
      lex_.take();
    }
    if (!t.value.fits_sint_p())
      throw ParseError("exponent out of range", t.pos);
    const int v = static_cast<int>(t.value.get_si());
    return neg ? -v : v;
  }

  ExprPtr primary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::Integer: {
        lex_.take();
        ExprPtr n = node(ExprNode::Kind::Integer, t.pos);
        n->value = t.value;
        return n;
      }
      case Token::Kind::Name: {
        lex_.take();
        ExprPtr n = node(ExprNode::Kind::Var, t.pos);
        n->name = t.text;
        return n;
      }
      case Token::Kind::LParen: {
        lex_.take();
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return e;
      }
      case Token::Kind::Minus: {
        lex_.take();
        ExprPtr n = node(ExprNode::Kind::Neg, t.pos);
        n->children = {factor()};
        return n;
      }
      default:
        throw ParseError("expected a value", t.pos);
    }
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
  return Parser(text).parse();
}

Polynomial eval_commutative(const ExprPtr& e,
                            const std::vector<std::string>& vars,
                            const std::string& source) {
  (void)source;
  switch (e->kind) {
    case ExprNode::Kind::Integer:
      return Polynomial::constant(vars, Rational(e->value));
    case ExprNode::Kind::Var: {
      Polynomial probe(vars);
      if (probe.var_index(e->name) < 0)
        throw ParseError("undeclared variable '" + e->name + "'", e->pos);
      return Polynomial::variable(vars, e->name);
    }
    case ExprNode::Kind::Add:
      return eval_commutative(e->children[0], vars, source) +
             eval_commutative(e->children[1], vars, source);
    case ExprNode::Kind::Sub:
      return eval_commutative(e->children[0], vars, source) -
             eval_commutative(e->children[1], vars, source);
    case ExprNode::Kind::Mul:
      return eval_commutative(e->children[0], vars, source) *
             eval_commutative(e->children[1], vars, source);
    case ExprNode::Kind::Div: {
      const Polynomial num = eval_commutative(e->children[0], vars, source);
      const Polynomial den = eval_commutative(e->children[1], vars, source);
      if (den.is_zero()) throw ParseError("division by zero", e->pos);
      if (den.term_count() != 1)
        throw ParseError("division is only allowed by integers or monomials",
                         e->pos);
      int used = 0;
      for (const auto& [exps, c] : den.terms())
        for (int x : exps)
          if (x != 0) ++used;
      if (used > 1)
        throw ParseError(
            "division is only allowed by integers or a power of one variable",
            e->pos);
      return num * den.pow(-1);
    }
    case ExprNode::Kind::Pow: {
      const Polynomial base = eval_commutative(e->children[0], vars, source);
      if (e->exponent < 0 && base.term_count() != 1)
        throw ParseError("negative power of a non-monomial", e->pos);
      return base.pow(e->exponent);
    }
    case ExprNode::Kind::Neg:
      return -eval_commutative(e->children[0], vars, source);
  }
  throw std::logic_error("unreachable");
}

}  // namespace qtrop
