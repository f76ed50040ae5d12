#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "qtrop/geometry.hpp"
#include "qtrop/weyl.hpp"

namespace qtrop {

// Linear recursion sum_i a_i(q^n, q) f_{n+i} = b(q^n, q).
struct RecursionSystem {
  int order = 0;
  std::vector<Polynomial> a;  // a_0 .. a_d in the (M, L, q) alphabet, L-free
  Polynomial b{weyl_vars()};  // zero means homogeneous
  std::vector<RationalFunction> initial_values;  // f_0 .. f_{d-1}
};

RecursionSystem make_recursion(const WeylElement& P, const Polynomial& b,
                               std::vector<RationalFunction> init);

// c(M, q) evaluated at M = q^n, as a Laurent polynomial in q.
QPoly eval_at_qn(const Polynomial& c, long n);

struct EvaluateError : std::runtime_error {
  long n;
  explicit EvaluateError(long n_)
      : std::runtime_error("leading coefficient vanishes at n = " +
                           std::to_string(n_)),
        n(n_) {}
};

// f_0 .. f_N, each step exact in Q(q).
std::vector<RationalFunction> evaluate(const RecursionSystem& rec, long N);

// gamma2(n) C(n,2) + gamma1(n) n + gamma0(n), coefficients periodic in n.
struct QuasiPolynomial {
  int period = 1;
  long onset = 0;
  std::vector<std::array<Rational, 3>> coeffs;  // per residue: g2, g1, g0

  Rational operator()(long n) const;
};

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Smallest period <= max_period and smallest onset >= min_onset with an
// exact fit; deltas[i] is the data point at n = i.
QuasiPolynomial fit_quasipolynomial(const std::vector<Rational>& deltas,
                                    int max_period = 8, long min_onset = 0);

struct SlopeSet {
  std::set<Rational> finite;
  bool vertical = false;  // the 1/0 marker

  bool operator==(const SlopeSet&) const = default;
};

// value set of gamma2
SlopeSet slopes(const QuasiPolynomial& qp);

SlopeSet negated(const std::set<Slope>& edge_slopes);

struct Prop1Entry {
  Rational slope;
  bool matched = false;
};

struct Prop1Report {
  bool contained = false;
  QuasiPolynomial fit;
  SlopeSet sequence_slopes;
  SlopeSet polygon_slopes;  // already negated
  std::vector<Prop1Entry> entries;
};

// s(f) from max q-degrees of N+1 sequence terms, checked against the
// negated edge slopes of N_{P,0}. P must annihilate the sequence.
Prop1Report check_prop1(const WeylElement& P, const RecursionSystem& rec,
                        long N = 40, int max_period = 8);

}  // namespace qtrop
