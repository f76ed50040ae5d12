#pragma once

#include <string>
#include <vector>

#include "qtrop/geometry.hpp"

namespace qtrop {

// Min-plus polynomial: min over terms of a*x + b*y + c.
struct TropicalTerm {
  Rational a, b, c;
  bool operator==(const TropicalTerm&) const = default;
};

struct TropicalPolynomial {
  std::vector<TropicalTerm> terms;
};

// One term per (L,M)-support point, constant = lift height (min of -k).
TropicalPolynomial tropicalize(const WeylElement& P);

// (a,b,c) -> (-a,-b,c): rotates the curve by 180 degrees. Sequence and knot
// operators are tropicalized through this map (the P(y,x,1/t) reading).
TropicalPolynomial point_reflected(const TropicalPolynomial& tp);

struct TropicalEval {
  Rational value;
  std::vector<std::size_t> argmin;
};

TropicalEval eval(const TropicalPolynomial& tp, const Rational& x,
                  const Rational& y);

struct RPoint {
  Rational x, y;
  bool operator==(const RPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const RPoint& o) const {
    const int c = cmp(x, o.x);
    return c != 0 ? c < 0 : cmp(y, o.y) < 0;
  }
};

struct CurveEdge {
  std::size_t v0, v1;
  long mult;
};

struct CurveRay {
  std::size_t base;
  Point2 dir;  // primitive
  long mult;
};

struct CurveLine {
  RPoint anchor;  // on a coordinate axis: smallest nonnegative intercept,
                  // x-axis preferred
  Point2 dir;     // primitive
  long mult;
};

struct TropicalCurve {
  std::vector<RPoint> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  std::vector<CurveLine> lines;
};

// Lifted configuration of the term support. Terms must have integer a, b;
// duplicate (a,b) keeps the smaller constant (it dominates under min).
LiftedConfiguration lift_config(const TropicalPolynomial& tp);

// Dual graph of lower_subdivision(lift_config(tp)).
TropicalCurve curve(const TropicalPolynomial& tp);

struct BalanceReport {
  bool balanced = true;
  // one defect vector per vertex, in vertex order
  std::vector<std::pair<long, long>> defects;
};

BalanceReport balancing_check(const TropicalCurve& c);

// Exact incidence test against any edge, ray, or line of the curve.
bool curve_contains(const TropicalCurve& c, const RPoint& p);

struct GridWitness {
  RPoint p;
  std::vector<std::size_t> argmin;
};

// Brute-force scan of a (grid+1) x (grid+1) lattice over
// [x0,x1] x [y0,y1]; keeps points where the min is attained twice.
std::vector<GridWitness> curve_oracle(const TropicalPolynomial& tp,
                                      const Rational& x0, const Rational& y0,
                                      const Rational& x1, const Rational& y1,
                                      int grid);

struct DualityReport {
  bool ok = false;
  std::size_t vertices = 0, two_cells = 0, merged_cells = 0;
  std::size_t bounded_edges = 0, interior_edges = 0;
  std::size_t rays = 0, boundary_edges = 0;
  std::vector<std::string> mismatches;
};

DualityReport duality_report(const TropicalCurve& c,
                             const RegularSubdivision& s);

}  // namespace qtrop
