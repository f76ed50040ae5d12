#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qtrop/rational.hpp"

namespace qtrop {

// Exponent vector aligned with a declared variable list. Laurent: negative
// exponents are allowed everywhere.
using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lex with earlier variables
// more significant. Used as the canonical term order for storage/printing.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial monomial(std::vector<std::string> vars, Exponents exps,
                             const Rational& c);
  static Polynomial variable(std::vector<std::string> vars,
                             const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int var_index(const std::string& name) const;  // -1 if absent

  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);  // accumulate

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  Polynomial pow(int e) const;  // e >= 0, or e < 0 for single-term monomials

  // Exact substitution name -> value. Unassigned variables must exist in the
  // common target alphabet (they map to themselves). Substituting into a
  // negative exponent requires the value be a nonzero single monomial.
  Polynomial substitute(
      const std::map<std::string, Polynomial>& assignments) const;

  // Degree bookkeeping per variable (0 for absent variable / zero poly).
  int degree_in(const std::string& var) const;
  int min_degree_in(const std::string& var) const;
  int total_degree() const;

  // Coefficient of var^k, as a polynomial over the same alphabet with the
  // var's exponent zeroed.
  Polynomial coeff_of(const std::string& var, int k) const;

  bool has_integer_coefficients() const;

  // Multiplies by var^k (k may be negative).
  Polynomial shifted(const std::string& var, int k) const;

  std::string str() const;  // canonical, graded-lex descending, re-parseable

 private:
  void check_same_alphabet(const Polynomial& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Exact multivariate division: returns q with d*q == p, or nullopt.
std::optional<Polynomial> divides(const Polynomial& d, const Polynomial& p);

// GCD over Z (up to the sign normalization: positive graded-lex leading
// coefficient). Inputs must have nonnegative exponents and integer
// coefficients after clearing; the implementation clears rational content.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficient polynomials of p viewed as a polynomial in the
// variables NOT in `sub` — i.e. the content of p in the `sub`-variables.
Polynomial content_in(const Polynomial& p, const std::set<std::string>& sub);

}  // namespace qtrop
