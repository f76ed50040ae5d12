#include "qtrop/ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace qtrop {

void QPoly::trim() {
  std::size_t b = 0;
  while (b < coeffs_.size() && coeffs_[b] == 0) ++b;
  std::size_t e = coeffs_.size();
  while (e > b && coeffs_[e - 1] == 0) --e;
  if (b == e) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (b > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + b);
  coeffs_.resize(e - b);
  low_ += static_cast<int>(b);
}

QPoly QPoly::monomial(int exp, const Rational& c) {
  QPoly p;
  if (c != 0) {
    p.low_ = exp;
    p.coeffs_ = {c};
  }
  return p;
}

QPoly QPoly::from_poly(const Polynomial& p) {
  int vi = -1;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    bool used = false;
    for (const auto& [e, c] : p.terms())
      if (e[i] != 0) used = true;
    if (used) {
      if (vi >= 0)
        throw std::domain_error("QPoly::from_poly: polynomial not univariate");
      vi = static_cast<int>(i);
    }
  }
  QPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(vi < 0 ? 0 : e[vi], c);
  return out;
}

int QPoly::low() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return low_;
}

int QPoly::deg() const {
  if (is_zero()) throw std::domain_error("degree of zero");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational QPoly::coeff(int e) const {
  const int i = e - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

void QPoly::add_term(int e, const Rational& c) {
  if (c == 0) return;
  if (is_zero()) {
    low_ = e;
    coeffs_ = {c};
    return;
  }
  if (e < low_) {
    coeffs_.insert(coeffs_.begin(), low_ - e, Rational(0));
    low_ = e;
  } else if (e > deg()) {
    coeffs_.resize(e - low_ + 1, Rational(0));
  }
  coeffs_[e - low_] += c;
  trim();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(deg(), o.deg());
  QPoly r;
  r.low_ = lo;
  r.coeffs_.assign(hi - lo + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    r.coeffs_[o.low_ - lo + i] += o.coeffs_[i];
  r.trim();
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.low_ = low_ + o.low_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

QPoly QPoly::operator*(const Rational& c) const {
  if (c == 0) return QPoly();
  QPoly r = *this;
  for (auto& k : r.coeffs_) k *= c;
  return r;
}

bool QPoly::operator==(const QPoly& o) const {
  return low_ == o.low_ && coeffs_ == o.coeffs_;
}

QPoly QPoly::shifted(int k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod_shifted(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return {QPoly(), QPoly()};
  // shift both to valuation 0
  QPoly r = shifted(-low_);
  const QPoly dd = d.shifted(-d.low_);
  QPoly q;
  const Rational lc = dd.coeffs_.back();
  const int dn = dd.deg();
  while (!r.is_zero() && r.deg() >= dn) {
    const int e = r.deg() - dn;
    const Rational c = r.coeffs_.back() / lc;
    q.add_term(e, c);
    // r -= c q^e dd
    for (std::size_t i = 0; i < dd.coeffs_.size(); ++i) {
      if (dd.coeffs_[i] == 0) continue;
      r.add_term(e + dd.low_ /*0*/ + static_cast<int>(i), -c * dd.coeffs_[i]);
    }
  }
  return {q, r};
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return QPoly();
  auto [q, r] = divmod_shifted(d);
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(low_ - d.low_);
}

Polynomial QPoly::to_poly(const std::string& var) const {
  Polynomial p({var});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p.add_term({low_ + static_cast<int>(i)}, coeffs_[i]);
  return p;
}

std::string QPoly::str(const std::string& var) const {
  return to_poly(var).str();
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.is_zero() ? a : a.shifted(-a.low());
  QPoly y = b.is_zero() ? b : b.shifted(-b.low());
  while (!y.is_zero()) {
    auto [q, r] = x.divmod_shifted(y);
    x = y;
    y = r.is_zero() ? r : r.shifted(-r.low());
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.coeff(x.deg()));
}

RationalFunction::RationalFunction(QPoly num, QPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  // push the denominator's q-power into the numerator, reduce, make monic
  num_ = num_.shifted(-den_.low());
  den_ = den_.shifted(-den_.low());
  const QPoly g = qpoly_gcd(num_, den_);
  if (!(g == QPoly::constant(1))) {
    num_ = num_.divide_exact(g).value();
    den_ = den_.divide_exact(g).value();
    den_ = den_.shifted(-den_.low());  // gcd may absorb a q factor
  }
  const Rational lc = den_.coeff(den_.deg());
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

bool RationalFunction::is_laurent() const {
  return den_ == QPoly::constant(1);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

int RationalFunction::deg() const {
  if (is_zero()) throw std::domain_error("degree of zero function");
  return num_.deg() - den_.deg();
}

int RationalFunction::min_deg() const {
  if (is_zero()) throw std::domain_error("valuation of zero function");
  return num_.low() - den_.low();
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num_.str();
  std::ostringstream out;
  out << "(" << num_.str() << ") / (" << den_.str() << ")";
  return out.str();
}

}  // namespace qtrop
