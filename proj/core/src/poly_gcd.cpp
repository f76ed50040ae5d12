#include <algorithm>
#include <cstdlib>

#include "qtrop/poly.hpp"

// GCD over Z[vars] via primitive pseudo-remainder sequences, recursing on the
// first variable present. Sizes here are small (knot operators have a few
// hundred terms), so PRS growth is acceptable.

namespace qtrop {

namespace {

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  auto q = divides(d, p);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

bool leading_negative(const Polynomial& p) {
  return !p.is_zero() && p.terms().rbegin()->second < 0;
}

Polynomial sign_normalized(const Polynomial& p) {
  return leading_negative(p) ? -p : p;
}

// p as a dense coefficient list in `var` (index = exponent), coefficients
// over the same alphabet with var zeroed.
std::vector<Polynomial> coeff_list(const Polynomial& p,
                                   const std::string& var) {
  const int d = p.degree_in(var);
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (int k = 0; k <= d; ++k) out.push_back(p.coeff_of(var, k));
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Polynomial from_coeff_list(const std::vector<Polynomial>& cs,
                           const std::string& var,
                           const std::vector<std::string>& vars) {
  Polynomial p(vars);
  const Polynomial v = Polynomial::variable(vars, var);
  for (std::size_t k = 0; k < cs.size(); ++k)
    p = p + cs[k] * v.pow(static_cast<int>(k));
  return p;
}

Polynomial gcd_rec(Polynomial a, Polynomial b);

Polynomial gcd_many(const std::vector<Polynomial>& ps) {
  Polynomial g(ps.front().vars());
  for (const auto& p : ps) {
    g = gcd_rec(g, p);
    if (!g.is_zero() && g.total_degree() == 0 && g.terms().begin()->second == 1)
      break;
  }
  return g;
}

// pseudo-remainder of a by b in `var` (deg a >= deg b >= 0 in var)
Polynomial prem(Polynomial a, const Polynomial& b, const std::string& var) {
  const int db = b.degree_in(var);
  const Polynomial lb = b.coeff_of(var, db);
  int da = a.degree_in(var);
  while (!a.is_zero() && da >= db) {
    const Polynomial la = a.coeff_of(var, da);
    a = a * lb - b * la.shifted(var, da - db);
    const int nda = a.degree_in(var);
    if (!a.is_zero() && nda >= da)
      throw std::logic_error("prem: degree did not drop");
    da = nda;
  }
  return a;
}

Polynomial gcd_rec(Polynomial a, Polynomial b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  // pick the first variable occurring in either
  std::string var;
  for (const auto& v : a.vars()) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  }
  if (var.empty()) {
    // both constants
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.terms().begin()->second.get_num().get_mpz_t(),
            b.terms().begin()->second.get_num().get_mpz_t());
    return Polynomial::constant(a.vars(), Rational(g));
  }
  const auto ca = coeff_list(a, var);
  const auto cb = coeff_list(b, var);
  const Polynomial cont_a = gcd_many(ca);
  const Polynomial cont_b = gcd_many(cb);
  const Polynomial cont = gcd_rec(cont_a, cont_b);
  Polynomial pa = divide_exact(a, cont_a);
  Polynomial pb = divide_exact(b, cont_b);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  // primitive PRS
  while (!pb.is_zero()) {
    Polynomial r = prem(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = Polynomial(a.vars());
    } else {
      pb = divide_exact(r, gcd_many(coeff_list(r, var)));
    }
  }
  if (pa.degree_in(var) == 0) return sign_normalized(cont);
  const Polynomial prim = divide_exact(pa, gcd_many(coeff_list(pa, var)));
  // prim divides both primitive parts iff it is the gcd; PRS guarantees it
  // divides the last nonzero remainder chain, verify to be safe.
  if (!divides(prim, divide_exact(a, cont_a)) ||
      !divides(prim, divide_exact(b, cont_b)))
    return sign_normalized(cont);
  return sign_normalized(cont * prim);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("polynomial alphabet mismatch");
  for (const auto& v : a.vars()) {
    if (a.min_degree_in(v) < 0 || b.min_degree_in(v) < 0)
      throw std::domain_error("gcd: Laurent input, shift exponents first");
  }
  // gcd_rec keeps the integer content, so the result is the full Z-gcd
  return sign_normalized(gcd_rec(a, b));
}

Polynomial content_in(const Polynomial& p, const std::set<std::string>& sub) {
  if (p.is_zero()) throw std::domain_error("content of zero polynomial");
  // group terms by the exponents of the complementary variables
  std::map<Exponents, Polynomial, GradedLexLess> groups;
  const auto& vars = p.vars();
  for (const auto& [e, c] : p.terms()) {
    Exponents outer(e.size(), 0), inner(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      (sub.count(vars[i]) ? inner[i] : outer[i]) = e[i];
    }
    auto [it, fresh] = groups.emplace(outer, Polynomial(vars));
    it->second.add_term(inner, c);
  }
  Polynomial g(vars);
  for (const auto& [e, q] : groups) g = poly_gcd(g, q);
  return g;
}

}  // namespace qtrop
