#pragma once

#include <map>
#include <set>
#include <vector>

#include "qtrop/poly.hpp"

namespace qtrop {

class WeylElement;

struct LatticePoint3 {
  long l, m, k;  // L-, M-, q-exponent
  auto operator<=>(const LatticePoint3&) const = default;
};

struct Point2 {
  long x, y;  // x = L-exponent, y = M-exponent
  auto operator<=>(const Point2&) const = default;
};

// (b - a) x (c - a), exact
long cross(const Point2& a, const Point2& b, const Point2& c);

// Convex lattice polygon with an explicit dimension tag: 0 = point,
// 1 = segment (two endpoints), 2 = full polygon, counterclockwise, minimal
// vertex representation.
struct LatticePolygon {
  int dim = 0;
  std::vector<Point2> vertices;
  bool operator==(const LatticePolygon&) const = default;
};

// hull of arbitrary points; result canonicalized (lowest-then-leftmost first)
LatticePolygon convex_hull(std::vector<Point2> pts);

bool polygon_contains(const LatticePolygon& poly, const Point2& p);

// exponent support and 3D hull vertex set of an operator
std::vector<LatticePoint3> support_3d(const WeylElement& P);
std::vector<LatticePoint3> newton_polytope_3d(const WeylElement& P);

LatticePolygon project_to_LM(const std::vector<LatticePoint3>& pts);
LatticePolygon polygon_at_q1(const WeylElement& P);

// N_{P,1} == N_{P,0}; also asserts the containment N_{P,1} within N_{P,0}.
bool is_good(const WeylElement& P);

// Lift heights: per (L,M)-support point, min over terms of (-k).
struct LiftedConfiguration {
  std::map<Point2, Rational> heights;
  // all q-exponents seen per point, for provenance/debugging
  std::map<Point2, std::vector<long>> provenance;
};

LiftedConfiguration lift(const WeylElement& P);
LiftedConfiguration lift_points(
    const std::vector<std::pair<Point2, Rational>>& pts);

struct SubdivisionCell {
  std::vector<Point2> hull;    // cell polygon, counterclockwise
  std::vector<Point2> marked;  // every lifted point on the cell's plane
  // supporting plane h = alpha*x + beta*y + gamma
  Rational alpha, beta, gamma;
};

struct Segment {
  Point2 a, b;  // a < b lexicographically
  auto operator<=>(const Segment&) const = default;
};

struct RegularSubdivision {
  int dim = 2;  // dimension of the support's affine hull
  std::vector<SubdivisionCell> cells;
  std::vector<Segment> interior_edges;  // shared by exactly two cells
  std::vector<Segment> boundary_edges;  // on the boundary of N_{P,0}
  // 1D case: the chain of lower-hull segments along the support line
  std::vector<Segment> chain;
  LatticePolygon outline;  // N_{P,0}
};

RegularSubdivision lower_subdivision(const LiftedConfiguration& cfg);

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

// Slope dm/dl in lowest terms; den == 0 encodes the vertical slope 1/0.
struct Slope {
  long num = 0, den = 1;
  auto operator<=>(const Slope&) const = default;
};

Slope make_slope(long dm, long dl);
std::set<Slope> edge_slopes(const LatticePolygon& p);

long lattice_length(const Point2& a, const Point2& b);

}  // namespace qtrop
