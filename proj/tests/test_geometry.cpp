#include <doctest.h>

#include <algorithm>
#include <random>

#include "qtrop/geometry.hpp"
#include "qtrop/weyl.hpp"

using namespace qtrop;

namespace {

long double_area(const std::vector<Point2>& ccw) {
  long a = 0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Point2 &p = ccw[i], &q = ccw[(i + 1) % ccw.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

std::vector<Point2> random_points(std::mt19937& rng, int n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
  return pts;
}

WeylElement random_operator(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> em(0, 5), el(0, 3), eq(-4, 4);
  std::uniform_int_distribution<long> c(-5, 5);
  Polynomial p(weyl_vars());
  for (int i = 0; i < terms; ++i) {
    const long cc = c(rng);
    if (cc != 0) p.add_term({em(rng), el(rng), eq(rng)}, Rational(cc));
  }
  return WeylElement(p);
}

LiftedConfiguration random_lift(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> d(-4, 4), num(-6, 6), den(1, 3);
  std::vector<std::pair<Point2, Rational>> pts;
  std::set<Point2> seen;
  for (int i = 0; i < n; ++i) {
    const Point2 p{d(rng), d(rng)};
    if (!seen.insert(p).second) continue;
    pts.push_back({p, rat(num(rng), den(rng))});
  }
  return lift_points(pts);
}

}  // namespace

TEST_CASE("convex hull: canonical, idempotent, order-independent") {
  std::mt19937 rng(11);
  for (int it = 0; it < 150; ++it) {
    std::vector<Point2> pts = random_points(rng, 1 + it % 12, -5, 5);
    const LatticePolygon h = convex_hull(pts);
    CHECK(convex_hull(h.vertices) == h);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(convex_hull(pts) == h);
    for (const auto& p : pts) CHECK(polygon_contains(h, p));
    if (h.dim == 2) {
      CHECK(h.vertices.size() >= 3);
      CHECK(double_area(h.vertices) > 0);  // counterclockwise
      // minimal representation: strict turns everywhere
      for (std::size_t i = 0; i < h.vertices.size(); ++i)
        CHECK(cross(h.vertices[i], h.vertices[(i + 1) % h.vertices.size()],
                    h.vertices[(i + 2) % h.vertices.size()]) > 0);
    }
  }
}

TEST_CASE("polygon containment") {
  const LatticePolygon t = convex_hull({{0, 0}, {4, 0}, {0, 4}});
  CHECK(polygon_contains(t, {1, 1}));
  CHECK(polygon_contains(t, {2, 2}));  // on the hypotenuse
  CHECK(!polygon_contains(t, {3, 2}));
  CHECK(!polygon_contains(t, {-1, 0}));
}

TEST_CASE("q -> 1 polygon is contained in the projected polytope") {
  std::mt19937 rng(22);
  int checked = 0;
  for (int it = 0; it < 120; ++it) {
    const WeylElement P = random_operator(rng, 2 + it % 8);
    if (P.is_zero()) continue;
    const LatticePolygon n0 = project_to_LM(support_3d(P));
    LatticePolygon n1;
    try {
      n1 = polygon_at_q1(P);
    } catch (const std::domain_error&) {
      continue;  // operator vanishes at q = 1
    }
    for (const auto& v : n1.vertices) CHECK(polygon_contains(n0, v));
    // is_good must agree with polygon equality (it asserts containment)
    CHECK(is_good(P) == (n0 == n1));
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("3D hull vertices: subset of support, hull-equal projection") {
  std::mt19937 rng(33);
  for (int it = 0; it < 60; ++it) {
    const WeylElement P = random_operator(rng, 3 + it % 8);
    if (P.is_zero()) continue;
    const auto supp = support_3d(P);
    const auto hull = newton_polytope_3d(P);
    const std::set<LatticePoint3> s(supp.begin(), supp.end());
    for (const auto& v : hull) CHECK(s.count(v) == 1);
    CHECK(project_to_LM(hull) == project_to_LM(supp));
  }
}

TEST_CASE("lower subdivision: area partition and edge sharing") {
  std::mt19937 rng(44);
  int full = 0;
  for (int it = 0; it < 150; ++it) {
    const LiftedConfiguration cfg = random_lift(rng, 3 + it % 9);
    if (cfg.heights.empty()) continue;
    const RegularSubdivision sub = lower_subdivision(cfg);
    if (sub.dim < 2) continue;
    ++full;
    long cells_area = 0;
    std::map<Segment, int> edge_count;
    for (const auto& cell : sub.cells) {
      cells_area += double_area(cell.hull);
      for (std::size_t i = 0; i < cell.hull.size(); ++i) {
        Point2 a = cell.hull[i], b = cell.hull[(i + 1) % cell.hull.size()];
        if (b < a) std::swap(a, b);
        ++edge_count[{a, b}];
      }
      // every marked point lies exactly on the supporting plane, and the
      // plane supports the whole configuration from below
      for (const auto& p : cell.marked)
        CHECK(cfg.heights.at(p) ==
              cell.alpha * p.x + cell.beta * p.y + cell.gamma);
      for (const auto& [p, h] : cfg.heights)
        CHECK(h >= cell.alpha * p.x + cell.beta * p.y + cell.gamma);
    }
    CHECK(cells_area == double_area(sub.outline.vertices));
    const std::set<Segment> interior(sub.interior_edges.begin(),
                                     sub.interior_edges.end());
    const std::set<Segment> boundary(sub.boundary_edges.begin(),
                                     sub.boundary_edges.end());
    for (const auto& [seg, n] : edge_count) {
      CHECK(n == (interior.count(seg) ? 2 : 1));
      CHECK(interior.count(seg) + boundary.count(seg) == 1);
    }
    CHECK(edge_count.size() == interior.size() + boundary.size());
  }
  CHECK(full > 80);
}

TEST_CASE("one-dimensional support gives a lower-hull chain") {
  // points on the line y = x with a strictly convex height
  const LiftedConfiguration cfg = lift_points(
      {{{0, 0}, Rational(0)}, {{1, 1}, Rational(-1)}, {{2, 2}, Rational(0)},
       {{3, 3}, Rational(3)}});
  const RegularSubdivision sub = lower_subdivision(cfg);
  CHECK(sub.dim == 1);
  REQUIRE(sub.chain.size() == 3);
  CHECK(sub.chain[0] == Segment{{0, 0}, {1, 1}});
}

TEST_CASE("Minkowski sum: published hexagon and generic properties") {
  const LatticePolygon quad = convex_hull({{1, 0}, {2, 2}, {1, 4}, {0, 2}});
  LatticePolygon seg;
  seg.dim = 1;
  seg.vertices = {{0, 0}, {0, 3}};
  const LatticePolygon hex = minkowski_sum(quad, seg);
  CHECK(hex == convex_hull({{1, 0}, {2, 2}, {2, 5}, {1, 7}, {0, 5}, {0, 2}}));
  CHECK(edge_slopes(hex) ==
        std::set<Slope>{make_slope(2, 1), make_slope(-2, 1),
                        make_slope(1, 0)});

  std::mt19937 rng(55);
  for (int it = 0; it < 80; ++it) {
    const LatticePolygon a = convex_hull(random_points(rng, 3 + it % 6, -4, 4));
    const LatticePolygon b = convex_hull(random_points(rng, 3 + it % 5, -4, 4));
    const LatticePolygon ab = minkowski_sum(a, b);
    CHECK(ab == minkowski_sum(b, a));
    // oracle: hull of all pairwise sums
    std::vector<Point2> sums;
    for (const auto& p : a.vertices)
      for (const auto& q : b.vertices) sums.push_back({p.x + q.x, p.y + q.y});
    CHECK(ab == convex_hull(sums));
    // translation by a point
    LatticePolygon pt;
    pt.vertices = {{2, -1}};
    LatticePolygon shifted = a;
    for (auto& v : shifted.vertices) v = {v.x + 2, v.y - 1};
    CHECK(minkowski_sum(a, pt) == shifted);
  }
}

TEST_CASE("slopes and lattice length") {
  CHECK(make_slope(4, 2) == Slope{2, 1});
  CHECK(make_slope(-4, 2) == Slope{-2, 1});
  CHECK(make_slope(4, -2) == Slope{-2, 1});
  CHECK(make_slope(3, 0) == Slope{1, 0});
  CHECK(make_slope(0, 5) == Slope{0, 1});
  CHECK(lattice_length({0, 0}, {4, 6}) == 2);
  CHECK(lattice_length({1, 1}, {1, 1}) == 0);
  CHECK(lattice_length({-1, 2}, {2, 2}) == 3);
}
