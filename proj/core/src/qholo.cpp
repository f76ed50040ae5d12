#include "qtrop/qholo.hpp"

#include <algorithm>

namespace qtrop {

RecursionSystem make_recursion(const WeylElement& P, const Polynomial& b,
                               std::vector<RationalFunction> init) {
  if (P.is_zero()) throw std::invalid_argument("zero recursion operator");
  RecursionSystem rec;
  rec.order = P.order();
  if (rec.order < 1) throw std::invalid_argument("recursion order must be >= 1");
  for (int i = 0; i <= rec.order; ++i) rec.a.push_back(P.coeff_L(i));
  if (rec.a.back().is_zero())
    throw std::invalid_argument("vanishing leading recursion coefficient");
  rec.b = b;
  if (!rec.b.is_zero() && rec.b.vars() != weyl_vars()) {
    std::map<std::string, Polynomial> into;
    for (const auto& v : rec.b.vars())
      into.emplace(v, Polynomial::variable(weyl_vars(), v));
    rec.b = rec.b.substitute(into);
  }
  if (static_cast<int>(init.size()) != rec.order)
    throw std::invalid_argument("need exactly d initial values");
  rec.initial_values = std::move(init);
  return rec;
}

QPoly eval_at_qn(const Polynomial& c, long n) {
  QPoly out;
  for (const auto& [e, coeff] : c.terms()) {
    if (e[1] != 0) throw std::domain_error("coefficient involves L");
    out.add_term(static_cast<int>(e[2] + e[0] * n), coeff);
  }
  return out;
}

std::vector<RationalFunction> evaluate(const RecursionSystem& rec, long N) {
  std::vector<RationalFunction> f = rec.initial_values;
  const int d = rec.order;
  for (long n = 0; n + d <= N; ++n) {
    const QPoly lead = eval_at_qn(rec.a[d], n);
    if (lead.is_zero()) throw EvaluateError(n);
    RationalFunction acc = RationalFunction::from_qpoly(eval_at_qn(rec.b, n));
    for (int i = 0; i < d; ++i)
      acc = acc - RationalFunction::from_qpoly(eval_at_qn(rec.a[i], n)) *
                      f[n + i];
    f.push_back(acc / RationalFunction::from_qpoly(lead));
  }
  f.resize(std::min<std::size_t>(f.size(), N + 1));
  return f;
}

Rational QuasiPolynomial::operator()(long n) const {
  const auto& g = coeffs[((n % period) + period) % period];
  return g[0] * Rational(n * (n - 1)) / 2 + g[1] * Rational(n) + g[2];
}

QuasiPolynomial fit_quasipolynomial(const std::vector<Rational>& deltas,
                                    int max_period, long min_onset) {
  const long len = static_cast<long>(deltas.size());
  for (int p = 1; p <= max_period; ++p) {
    // need three points per residue class to fit, one more to confirm
    const long max_onset = len - 4L * p;
    for (long n0 = min_onset; n0 <= max_onset; ++n0) {
      QuasiPolynomial qp;
      qp.period = p;
      qp.onset = n0;
      qp.coeffs.assign(p, {});
      bool ok = true;
      for (int r = 0; r < p && ok; ++r) {
        std::vector<long> ns;
        for (long n = n0; n < len; ++n)
          if (n % p == r) ns.push_back(n);
        if (ns.size() < 3) {
          ok = false;
          break;
        }
        // solve for (g2, g1, g0) on the first three class members
        const auto row = [](long n) {
          return std::array<Rational, 3>{Rational(n * (n - 1)) / 2,
                                         Rational(n), Rational(1)};
        };
        std::array<std::array<Rational, 4>, 3> m;
        for (int i = 0; i < 3; ++i) {
          const auto rw = row(ns[i]);
          m[i] = {rw[0], rw[1], rw[2], deltas[ns[i]]};
        }
        for (int col = 0; col < 3 && ok; ++col) {
          int piv = -1;
          for (int i = col; i < 3; ++i)
            if (m[i][col] != 0) {
              piv = i;
              break;
            }
          if (piv < 0) {
            ok = false;  // singular: cannot happen for distinct n, guard anyway
            break;
          }
          std::swap(m[col], m[piv]);
          for (int i = 0; i < 3; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rational k = m[i][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[i][j] -= k * m[col][j];
          }
        }
        if (!ok) break;
        auto& g = qp.coeffs[r];
        for (int i = 0; i < 3; ++i) g[i] = m[i][3] / m[i][i];
        for (std::size_t i = 3; i < ns.size(); ++i) {
          if (qp(ns[i]) != deltas[ns[i]]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return qp;
    }
  }
  throw FitError("no quadratic quasi-polynomial fit within the period bound");
}

SlopeSet slopes(const QuasiPolynomial& qp) {
  SlopeSet s;
  for (const auto& g : qp.coeffs) s.finite.insert(g[0]);
  return s;
}

SlopeSet negated(const std::set<Slope>& edge_slopes) {
  SlopeSet s;
  for (const auto& e : edge_slopes) {
    if (e.den == 0)
      s.vertical = true;
    else
      s.finite.insert(Rational(-e.num) / Rational(e.den));
  }
  return s;
}

Prop1Report check_prop1(const WeylElement& P, const RecursionSystem& rec,
                        long N, int max_period) {
  const auto f = evaluate(rec, N);
  // precondition: P annihilates f (homogeneous) on every computed window
  const int d = P.order();
  for (long n = 0; n + d < static_cast<long>(f.size()); ++n) {
    std::vector<RationalFunction> window(f.begin() + n, f.begin() + n + d + 1);
    if (!apply(P, window, n).is_zero())
      throw std::invalid_argument("operator does not annihilate the sequence");
  }
  // leading zeros carry no degree information; interior zeros are an error
  std::size_t start = 0;
  while (start < f.size() && f[start].is_zero()) ++start;
  std::vector<Rational> deltas(start, Rational(0));
  for (std::size_t i = start; i < f.size(); ++i) {
    if (f[i].is_zero())
      throw std::domain_error("zero sequence value: slope set undefined");
    deltas.push_back(Rational(f[i].deg()));
  }
  Prop1Report rep;
  rep.fit = fit_quasipolynomial(deltas, max_period, static_cast<long>(start));
  rep.sequence_slopes = slopes(rep.fit);
  rep.polygon_slopes = negated(edge_slopes(project_to_LM(support_3d(P))));
  rep.contained = true;
  for (const auto& s : rep.sequence_slopes.finite) {
    const bool hit = rep.polygon_slopes.finite.count(s) > 0;
    rep.entries.push_back({s, hit});
    if (!hit) rep.contained = false;
  }
  return rep;
}

}  // namespace qtrop
