#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrop/poly.hpp"

namespace qtrop {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Expression tree shared by the commutative parser and WeylWord. Products
// keep their factor order so the q-Weyl evaluation can be noncommutative.
struct ExprNode {
  enum class Kind { Integer, Var, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind;
  Integer value;             // Integer
  std::string name;          // Var
  int exponent = 0;          // Pow
  std::vector<std::shared_ptr<ExprNode>> children;
  std::size_t pos = 0;
};

using ExprPtr = std::shared_ptr<ExprNode>;

// Parses the input grammar: integer literals, declared names, ^ with integer
// (possibly negative) exponents, * + - and parentheses, / by integer literals
// or pure powers of a single variable. Explicit '*' required.
ExprPtr parse_expression(const std::string& text);

// Commutative evaluation over a declared alphabet.
Polynomial eval_commutative(const ExprPtr& e,
                            const std::vector<std::string>& vars,
                            const std::string& source);

inline Polynomial parse_poly(const std::string& text,
                             const std::vector<std::string>& vars) {
  return eval_commutative(parse_expression(text), vars, text);
}

}  // namespace qtrop
