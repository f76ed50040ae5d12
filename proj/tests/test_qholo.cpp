#include <doctest.h>

#include <random>

#include "qtrop/qholo.hpp"

using namespace qtrop;

namespace {

Polynomial wpoly(const std::string& s) { return parse_poly(s, weyl_vars()); }
WeylElement welt(const std::string& s) { return WeylElement(wpoly(s)); }

RationalFunction rf(const std::string& q_expr) {
  return RationalFunction::from_qpoly(
      QPoly::from_poly(parse_poly(q_expr, {"q"})));
}

Polynomial random_Lfree(std::mt19937& rng) {
  std::uniform_int_distribution<int> em(0, 3), eq(-2, 2);
  std::uniform_int_distribution<long> c(-4, 4);
  Polynomial p(weyl_vars());
  for (int i = 0; i < 3; ++i) p.add_term({em(rng), 0, eq(rng)}, Rational(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("eval_at_qn substitutes M = q^n") {
  const Polynomial c = wpoly("M^2*q - 3*M + q^-2");
  for (long n = 0; n <= 4; ++n) {
    QPoly expect;
    expect.add_term(static_cast<int>(2 * n + 1), 1);
    expect.add_term(static_cast<int>(n), -3);
    expect.add_term(-2, 1);
    CHECK(eval_at_qn(c, n) == expect);
  }
  CHECK_THROWS_AS(eval_at_qn(wpoly("L"), 0), std::domain_error);
}

TEST_CASE("evaluate/apply round-trip on random driven recursions") {
  std::mt19937 rng(1001);
  int done = 0;
  for (int it = 0; it < 40; ++it) {
    // monic order-2 operator with random L-free lower coefficients
    const Polynomial a0 = random_Lfree(rng), a1 = random_Lfree(rng);
    const Polynomial b = random_Lfree(rng);
    const WeylElement P = WeylElement(
        wpoly("L^2") + a1 * wpoly("L") + a0);
    if (P.order() != 2) continue;
    const RecursionSystem rec = make_recursion(P, b, {rf("1"), rf("q")});
    const auto f = evaluate(rec, 12);
    REQUIRE(f.size() == 13);
    for (long n = 0; n + 2 < 13; ++n) {
      const std::vector<RationalFunction> w(f.begin() + n, f.begin() + n + 3);
      CHECK(apply(P, w, n) ==
            RationalFunction::from_qpoly(eval_at_qn(b, n)));
    }
    ++done;
  }
  CHECK(done > 20);
}

TEST_CASE("evaluate reports the step where the leading coefficient dies") {
  // leading coefficient M - q^3 vanishes exactly at n = 3
  const WeylElement P = welt("(M - q^3)*L - 1");
  const RecursionSystem rec = make_recursion(P, wpoly("0"), {rf("1")});
  CHECK_THROWS_AS(evaluate(rec, 10), EvaluateError);
  try {
    evaluate(rec, 10);
  } catch (const EvaluateError& e) {
    CHECK(e.n == 3);
  }
  CHECK(evaluate(rec, 3).size() == 4);  // stops before the bad step
}

TEST_CASE("make_recursion validates its inputs") {
  CHECK_THROWS_AS(make_recursion(welt("M + 1"), wpoly("0"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_recursion(welt("L"), wpoly("0"), {rf("1"), rf("1")}),
                  std::invalid_argument);
}

TEST_CASE("quasi-polynomial fit recovers synthetic data") {
  std::mt19937 rng(2002);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  for (int it = 0; it < 50; ++it) {
    QuasiPolynomial truth;
    truth.period = 1 + it % 4;
    truth.coeffs.assign(truth.period, {});
    for (auto& g : truth.coeffs)
      g = {rat(num(rng), den(rng)), rat(num(rng), den(rng)),
           rat(num(rng), den(rng))};
    std::vector<Rational> data;
    for (long n = 0; n < 40; ++n) data.push_back(truth(n));
    const QuasiPolynomial fit = fit_quasipolynomial(data, 8);
    CHECK(fit.period <= truth.period);  // smallest period wins
    for (long n = 0; n < 40; ++n) CHECK(fit(n) == truth(n));
  }
}

TEST_CASE("fit respects the onset and period bounds") {
  // quadratic from n = 2 on, garbage before
  std::vector<Rational> data = {Rational(100), Rational(-100)};
  for (long n = 2; n < 20; ++n) data.push_back(Rational(n * n));
  const QuasiPolynomial fit = fit_quasipolynomial(data, 8);
  CHECK(fit.period == 1);
  CHECK(fit.onset == 2);
  for (long n = 2; n < 20; ++n) CHECK(fit(n) == Rational(n * n));
  // cubic growth admits no quadratic quasi-polynomial
  std::vector<Rational> cubic;
  for (long n = 0; n < 40; ++n) cubic.push_back(Rational(n * n * n));
  CHECK_THROWS_AS(fit_quasipolynomial(cubic, 4), FitError);
}

TEST_CASE("slopes are invariant under adding a linear quasi-polynomial") {
  std::mt19937 rng(3003);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int it = 0; it < 40; ++it) {
    QuasiPolynomial truth;
    truth.period = 1 + it % 3;
    truth.coeffs.assign(truth.period, {});
    for (auto& g : truth.coeffs)
      g = {Rational(num(rng)), Rational(num(rng)), Rational(num(rng))};
    const Rational lin_a = Rational(num(rng)), lin_b = Rational(num(rng));
    std::vector<Rational> base, shifted;
    for (long n = 0; n < 40; ++n) {
      base.push_back(truth(n));
      shifted.push_back(truth(n) + lin_a * Rational(n) + lin_b);
    }
    CHECK(slopes(fit_quasipolynomial(base, 8)) ==
          slopes(fit_quasipolynomial(shifted, 8)));
  }
}

TEST_CASE("negated edge slopes keep the vertical marker") {
  const SlopeSet s = negated(
      {make_slope(2, 1), make_slope(-5, 1), make_slope(1, 0), make_slope(0, 1)});
  CHECK(s.vertical);
  CHECK(s.finite == std::set<Rational>{Rational(-2), Rational(5), Rational(0)});
}

TEST_CASE("slope containment for q-geometric sequences") {
  // f_{n+1} = q^(a n + b) f_n gives deg f_n quadratic with slope a, and
  // N_{P,0} of P = L - q^b M^a is a segment of slope -a.
  for (long a = -5; a <= 5; ++a) {
    const std::string op =
        "L - q^" + std::to_string(3) + "*M^" + std::to_string(a);
    const WeylElement P = welt(op);
    const RecursionSystem rec = make_recursion(P, wpoly("0"), {rf("1")});
    const Prop1Report rep = check_prop1(P, rec, 30);
    CHECK(rep.contained);
    CHECK(rep.sequence_slopes.finite == std::set<Rational>{Rational(a)});
  }
}

TEST_CASE("check_prop1 rejects operators that do not annihilate") {
  const WeylElement P = welt("L - M");  // annihilates q^C(n,2) only
  const RecursionSystem rec =
      make_recursion(welt("L - q*M"), wpoly("0"), {rf("1")});
  CHECK_THROWS_AS(check_prop1(P, rec, 20), std::invalid_argument);
}
