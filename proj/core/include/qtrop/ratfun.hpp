#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtrop/poly.hpp"

namespace qtrop {

// Dense univariate Laurent polynomial in q over Rational. The workhorse for
// sequence evaluation, where multivariate maps would be too slow.
class QPoly {
 public:
  QPoly() = default;

  static QPoly monomial(int exp, const Rational& c);
  static QPoly constant(const Rational& c) { return monomial(0, c); }
  static QPoly from_poly(const Polynomial& p);  // p univariate (or constant)

  bool is_zero() const { return coeffs_.empty(); }
  int low() const;   // valuation; throws on zero
  int deg() const;   // top exponent; throws on zero
  Rational coeff(int e) const;
  const std::vector<Rational>& raw() const { return coeffs_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& c) const;
  bool operator==(const QPoly& o) const;

  void add_term(int e, const Rational& c);

  // Exact Laurent division; nullopt when not exact.
  std::optional<QPoly> divide_exact(const QPoly& d) const;

  // Polynomial division on the non-Laurent normalizations; returns (quo, rem)
  // of this/d after both are shifted to valuation 0.
  std::pair<QPoly, QPoly> divmod_shifted(const QPoly& d) const;

  QPoly shifted(int k) const;  // multiply by q^k

  Polynomial to_poly(const std::string& var = "q") const;
  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] is the q^(low_+i) coefficient
};

QPoly qpoly_gcd(const QPoly& a, const QPoly& b);  // monic, valuation 0

// f(q) = num/den, den monic with nonzero constant term, gcd(num, den) = 1.
// num may be Laurent.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::constant(1)) {}
  RationalFunction(QPoly num, QPoly den);
  static RationalFunction from_qpoly(QPoly p) {
    return RationalFunction(std::move(p), QPoly::constant(1));
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const;

  int deg() const;      // deg num - deg den; throws on zero
  int min_deg() const;  // valuation
  std::string str() const;

 private:
  QPoly num_, den_;
};

}  // namespace qtrop
