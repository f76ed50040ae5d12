#pragma once

#include <optional>
#include <vector>

#include "qtrop/parser.hpp"
#include "qtrop/poly.hpp"
#include "qtrop/ratfun.hpp"

namespace qtrop {

// Alphabet of the q-Weyl algebra, in canonical order.
const std::vector<std::string>& weyl_vars();  // {M, L, q}

// Normal-ordered element of W = Z[q^±1]<M,L>/(LM - qML): a commutative
// polynomial in (M, L, q) read with all M-powers to the left of all L-powers.
class WeylElement {
 public:
  WeylElement() : poly_(weyl_vars()) {}
  explicit WeylElement(Polynomial p);

  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  int order() const { return poly_.degree_in("L"); }
  Polynomial coeff_L(int i) const { return poly_.coeff_of("L", i); }

  bool operator==(const WeylElement& o) const { return poly_ == o.poly_; }

 private:
  Polynomial poly_;
};

WeylElement weyl_add(const WeylElement& a, const WeylElement& b);
WeylElement weyl_sub(const WeylElement& a, const WeylElement& b);
// Noncommutative product via L^a M^b = q^(ab) M^b L^a.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_pow(const WeylElement& a, int e);

// Unreduced noncommutative expression (factor order preserved).
struct WeylWord {
  ExprPtr root;
};

WeylWord parse_weyl_word(const std::string& text);
WeylElement normal_order(const WeylWord& w);

// c(M, q) -> c(M q^k, q)
Polynomial shift_M(const Polynomial& c, int k);

// (P f)_n where window[i] = f_{n+i} for i = 0..order.
RationalFunction apply(const WeylElement& P,
                       const std::vector<RationalFunction>& window, long n);

// Clears rational denominators and Laurent offsets into Z[M,q], removes the
// (M,q)-content, and makes the graded-lex leading coefficient of a_d positive.
WeylElement reduce(const WeylElement& P);

// Clears denominators of (L-1) b^{-1} P and reduces; annihilates any f with
// P f = b. b == 0 returns P unchanged.
WeylElement homogenize(const WeylElement& P, const Polynomial& b);

// Left division by (L-1): returns Q with P = (L-1) * Q when exact.
std::optional<WeylElement> left_divide_L_minus_1(const WeylElement& P);

}  // namespace qtrop
