#include "qtrop/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtrop {

namespace {

int total(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::vector<std::string> vars,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, Exponents exps,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  if (exps.size() != p.vars_.size())
    throw std::invalid_argument("monomial: exponent/alphabet size mismatch");
  if (c != 0) p.terms_[std::move(exps)] = c;
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars,
                                const std::string& name) {
  Polynomial p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) throw std::invalid_argument("undeclared variable: " + name);
  Exponents e(p.vars_.size(), 0);
  e[i] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

int Polynomial::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Rational Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_alphabet(const Polynomial& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomial alphabet mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_alphabet(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_alphabet(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_alphabet(o);
  Polynomial r(vars_);
  Exponents e(vars_.size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1)
      throw std::domain_error("negative power of a non-monomial");
    const auto& [exps, c] = *terms_.begin();
    Exponents inv(exps.size());
    Rational cc(1);
    for (std::size_t i = 0; i < exps.size(); ++i) inv[i] = exps[i] * e;
    Rational base = c;
    for (int i = 0; i < -e; ++i) cc /= base;
    return monomial(vars_, std::move(inv), cc);
  }
  Polynomial acc = constant(vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& assignments) const {
  // figure out the target alphabet
  std::vector<std::string> target = vars_;
  if (!assignments.empty()) {
    target = assignments.begin()->second.vars();
    for (const auto& [name, val] : assignments) {
      if (val.vars() != target)
        throw std::invalid_argument("substitute: mixed target alphabets");
    }
  }
  std::vector<Polynomial> values;
  values.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignments.find(v);
    if (it != assignments.end()) {
      values.push_back(it->second);
    } else {
      Polynomial self(target);
      const int idx = self.var_index(v);
      if (idx < 0)
        throw std::invalid_argument(
            "substitute: variable " + v + " absent from target alphabet");
      values.push_back(Polynomial::variable(target, v));
    }
  }
  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i].term_count() != 1)
        throw std::domain_error(
            "substitute: negative exponent needs a monomial value for " +
            vars_[i]);
      term = term * values[i].pow(e[i]);
    }
    result = result + term;
  }
  return result;
}

int Polynomial::degree_in(const std::string& var) const {
  const int i = var_index(var);
  if (i < 0 || terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int Polynomial::min_degree_in(const std::string& var) const {
  const int i = var_index(var);
  if (i < 0 || terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const int t = total(e);
    d = first ? t : std::max(d, t);
    first = false;
  }
  return d;
}

Polynomial Polynomial::coeff_of(const std::string& var, int k) const {
  const int i = var_index(var);
  if (i < 0) throw std::invalid_argument("coeff_of: unknown variable " + var);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponents e2 = e;
    e2[i] = 0;
    r.add_term(e2, c);
  }
  return r;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Polynomial Polynomial::shifted(const std::string& var, int k) const {
  const int i = var_index(var);
  if (i < 0) throw std::invalid_argument("shifted: unknown variable " + var);
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    e2[i] += k;
    r.terms_[std::move(e2)] = c;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        factors.push_back(vars_[i]);
      else
        factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << factors[i];
      }
    }
  }
  return out.str();
}

std::optional<Polynomial> divides(const Polynomial& d, const Polynomial& p) {
  if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
  if (d.vars() != p.vars())
    throw std::invalid_argument("polynomial alphabet mismatch");
  if (p.is_zero()) return Polynomial(p.vars());
  const std::size_t nv = d.vars().size();
  // normalize away Laurent offsets (divisibility up to monomial units)
  Exponents dshift(nv, 0), pshift(nv, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    dshift[i] = d.min_degree_in(d.vars()[i]);
    pshift[i] = p.min_degree_in(p.vars()[i]);
  }
  Polynomial dd(d.vars()), pp(p.vars());
  for (const auto& [e, c] : d.terms()) {
    Exponents e2(nv);
    for (std::size_t i = 0; i < nv; ++i) e2[i] = e[i] - dshift[i];
    dd.add_term(e2, c);
  }
  for (const auto& [e, c] : p.terms()) {
    Exponents e2(nv);
    for (std::size_t i = 0; i < nv; ++i) e2[i] = e[i] - pshift[i];
    pp.add_term(e2, c);
  }
  const auto& dlead = *dd.terms().rbegin();
  Polynomial q(p.vars());
  Polynomial r = pp;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Exponents e(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    const Polynomial t =
        Polynomial::monomial(p.vars(), e, rlead.second / dlead.second);
    q = q + t;
    r = r - t * dd;
  }
  // undo the shifts: quotient gains pshift - dshift (may be Laurent)
  Polynomial out(p.vars());
  for (const auto& [e, c] : q.terms()) {
    Exponents e2(nv);
    for (std::size_t i = 0; i < nv; ++i) e2[i] = e[i] + pshift[i] - dshift[i];
    out.add_term(e2, c);
  }
  return out;
}

}  // namespace qtrop
