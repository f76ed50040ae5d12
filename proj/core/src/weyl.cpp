#include "qtrop/weyl.hpp"

#include <algorithm>

namespace qtrop {

const std::vector<std::string>& weyl_vars() {
  static const std::vector<std::string> v = {"M", "L", "q"};
  return v;
}

namespace {
constexpr int kM = 0, kL = 1, kQ = 2;
}

WeylElement::WeylElement(Polynomial p) : poly_(std::move(p)) {
  if (poly_.vars() != weyl_vars())
    throw std::invalid_argument("WeylElement expects the (M, L, q) alphabet");
}

WeylElement weyl_add(const WeylElement& a, const WeylElement& b) {
  return WeylElement(a.poly() + b.poly());
}

WeylElement weyl_sub(const WeylElement& a, const WeylElement& b) {
  return WeylElement(a.poly() - b.poly());
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  // (M^j1 L^i1 q^k1)(M^j2 L^i2 q^k2) = q^(k1+k2+i1*j2) M^(j1+j2) L^(i1+i2)
  Polynomial r(weyl_vars());
  for (const auto& [e1, c1] : a.poly().terms()) {
    for (const auto& [e2, c2] : b.poly().terms()) {
      Exponents e = {e1[kM] + e2[kM], e1[kL] + e2[kL],
                     e1[kQ] + e2[kQ] + e1[kL] * e2[kM]};
      r.add_term(e, c1 * c2);
    }
  }
  return WeylElement(std::move(r));
}

WeylElement weyl_pow(const WeylElement& a, int e) {
  if (e < 0) {
    // only invertible for monomials in q (units of W)
    if (a.poly().term_count() != 1)
      throw std::domain_error("negative power of a non-unit Weyl element");
    const auto& [exps, c] = *a.poly().terms().begin();
    if (exps[kM] != 0 || exps[kL] != 0 || (c != 1 && c != -1))
      throw std::domain_error("negative power of a non-unit Weyl element");
    Exponents inv = {0, 0, exps[kQ] * e};
    return WeylElement(Polynomial::monomial(weyl_vars(), inv, c));
  }
  WeylElement acc(Polynomial::constant(weyl_vars(), 1));
  WeylElement base = a;
  while (e > 0) {
    if (e & 1) acc = weyl_mul(acc, base);
    base = weyl_mul(base, base);
    e >>= 1;
  }
  return acc;
}

WeylWord parse_weyl_word(const std::string& text) {
  return WeylWord{parse_expression(text)};
}

namespace {

WeylElement eval_word(const ExprPtr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Integer:
      return WeylElement(
          Polynomial::constant(weyl_vars(), Rational(e->value)));
    case ExprNode::Kind::Var: {
      Polynomial probe(weyl_vars());
      if (probe.var_index(e->name) < 0)
        throw ParseError("Weyl words admit only M, L, q: got '" + e->name + "'",
                         e->pos);
      return WeylElement(Polynomial::variable(weyl_vars(), e->name));
    }
    case ExprNode::Kind::Add:
      return weyl_add(eval_word(e->children[0]), eval_word(e->children[1]));
    case ExprNode::Kind::Sub:
      return weyl_sub(eval_word(e->children[0]), eval_word(e->children[1]));
    case ExprNode::Kind::Mul:
      return weyl_mul(eval_word(e->children[0]), eval_word(e->children[1]));
    case ExprNode::Kind::Div: {
      const WeylElement num = eval_word(e->children[0]);
      const WeylElement den = eval_word(e->children[1]);
      // division only by central units: integers and powers of q
      if (den.poly().term_count() != 1)
        throw ParseError("Weyl division only by integers or powers of q",
                         e->pos);
      const auto& [exps, c] = *den.poly().terms().begin();
      if (exps[kM] != 0 || exps[kL] != 0)
        throw ParseError("Weyl division only by integers or powers of q",
                         e->pos);
      Polynomial inv =
          Polynomial::monomial(weyl_vars(), {0, 0, -exps[kQ]}, Rational(1) / c);
      return WeylElement(num.poly() * inv);
    }
    case ExprNode::Kind::Pow:
      return weyl_pow(eval_word(e->children[0]), e->exponent);
    case ExprNode::Kind::Neg:
      return WeylElement(-eval_word(e->children[0]).poly());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

WeylElement normal_order(const WeylWord& w) { return eval_word(w.root); }

Polynomial shift_M(const Polynomial& c, int k) {
  if (c.vars() != weyl_vars())
    throw std::invalid_argument("shift_M expects the (M, L, q) alphabet");
  Polynomial r(weyl_vars());
  for (const auto& [e, coeff] : c.terms()) {
    Exponents e2 = e;
    e2[kQ] += k * e[kM];
    r.add_term(e2, coeff);
  }
  return r;
}

RationalFunction apply(const WeylElement& P,
                       const std::vector<RationalFunction>& window, long n) {
  const int d = P.order();
  if (static_cast<int>(window.size()) < d + 1)
    throw std::invalid_argument("apply: sequence window too short");
  const int imin = P.poly().min_degree_in("L");
  if (imin < 0) throw std::domain_error("apply: negative L powers");
  // group by L exponent: s_i(q) = sum c q^(k + j n)
  std::vector<QPoly> s(d + 1);
  for (const auto& [e, c] : P.poly().terms()) {
    s[e[kL]].add_term(static_cast<int>(e[kQ] + e[kM] * n), c);
  }
  RationalFunction acc;
  for (int i = 0; i <= d; ++i) {
    if (s[i].is_zero()) continue;
    acc = acc + RationalFunction::from_qpoly(s[i]) * window[i];
  }
  return acc;
}

WeylElement reduce(const WeylElement& P) {
  if (P.is_zero()) throw std::domain_error("reduce: zero operator");
  Polynomial p = P.poly();
  // clear rational denominators
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  if (lcm != 1) p = p * Rational(lcm);
  // clear Laurent offsets in M and q (multiplication by a unit monomial)
  const int mshift = std::min(0, p.min_degree_in("M"));
  const int qshift = std::min(0, p.min_degree_in("q"));
  if (mshift < 0) p = p.shifted("M", -mshift);
  if (qshift < 0) p = p.shifted("q", -qshift);
  // remove the Z[M,q]-content
  const Polynomial cont = content_in(p, {"M", "q"});
  if (!(cont == Polynomial::constant(weyl_vars(), 1))) {
    auto q = divides(cont, p);
    if (!q) throw std::logic_error("reduce: content does not divide");
    p = *q;
  }
  // positive graded-lex leading coefficient of a_d
  const Polynomial ad = p.coeff_of("L", p.degree_in("L"));
  if (!ad.is_zero() && ad.terms().rbegin()->second < 0) p = -p;
  return WeylElement(std::move(p));
}

WeylElement homogenize(const WeylElement& P, const Polynomial& b_in) {
  Polynomial b = b_in;
  if (b.vars() != weyl_vars()) {
    std::map<std::string, Polynomial> into;
    for (const auto& v : b.vars())
      into.emplace(v, Polynomial::variable(weyl_vars(), v));
    b = b.substitute(into);
  }
  if (b.is_zero()) return P;
  if (b.degree_in("L") != 0 || b.min_degree_in("L") != 0)
    throw std::invalid_argument("homogenize: b must not involve L");
  // (L-1) b^{-1} P over the common denominator b(M,q) b(Mq,q):
  // coefficient of L^j is a_{j-1}(Mq,q) b(M,q) - a_j(M,q) b(Mq,q).
  const int d = P.order();
  const Polynomial bshift = shift_M(b, 1);
  Polynomial num(weyl_vars());
  const Polynomial Lvar = Polynomial::variable(weyl_vars(), "L");
  for (int j = 0; j <= d + 1; ++j) {
    Polynomial cj(weyl_vars());
    if (j >= 1) cj = cj + shift_M(P.coeff_L(j - 1), 1) * b;
    if (j <= d) cj = cj - P.coeff_L(j) * bshift;
    if (!cj.is_zero()) num = num + cj * Lvar.pow(j);
  }
  if (num.is_zero())
    throw std::domain_error("homogenize: (L-1) b^{-1} P vanished");
  return reduce(WeylElement(std::move(num)));
}

std::optional<WeylElement> left_divide_L_minus_1(const WeylElement& P) {
  if (P.is_zero()) throw std::domain_error("zero operator");
  const int d = P.order();
  if (d < 1) return std::nullopt;
  // P = (L-1) Q means c_j = p_{j-1}(Mq,q) - p_j(M,q), with Q = sum p_i L^i.
  std::vector<Polynomial> p(d, Polynomial(weyl_vars()));
  p[d - 1] = shift_M(P.coeff_L(d), -1);
  for (int j = d - 1; j >= 1; --j)
    p[j - 1] = shift_M(P.coeff_L(j) + p[j], -1);
  if (!(P.coeff_L(0) == -p[0])) return std::nullopt;
  Polynomial q(weyl_vars());
  const Polynomial Lvar = Polynomial::variable(weyl_vars(), "L");
  for (int i = 0; i < d; ++i) q = q + p[i] * Lvar.pow(i);
  return WeylElement(std::move(q));
}

}  // namespace qtrop
