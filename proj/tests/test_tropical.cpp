#include <doctest.h>

#include <random>
#include <set>

#include "qtrop/tropical.hpp"
#include "qtrop/weyl.hpp"

using namespace qtrop;

namespace {

WeylElement welt(const std::string& s) {
  return WeylElement(parse_poly(s, weyl_vars()));
}

TropicalPolynomial random_tropical(std::mt19937& rng, int max_terms,
                                   bool integer_heights) {
  std::uniform_int_distribution<int> nterms(2, max_terms);
  std::uniform_int_distribution<long> coord(-4, 4), num(-6, 6), den(1, 3);
  TropicalPolynomial tp;
  std::set<std::pair<long, long>> seen;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const long a = coord(rng), b = coord(rng);
    if (!seen.insert({a, b}).second) continue;
    tp.terms.push_back({Rational(a), Rational(b),
                        integer_heights ? Rational(num(rng))
                                        : rat(num(rng), den(rng))});
  }
  return tp;
}

struct CurveShape {
  std::set<RPoint> vertices;
  std::multiset<std::pair<std::pair<RPoint, RPoint>, long>> edges;
  std::multiset<std::tuple<RPoint, Point2, long>> rays;

  explicit CurveShape(const TropicalCurve& c) {
    vertices.insert(c.vertices.begin(), c.vertices.end());
    for (const auto& e : c.edges) {
      RPoint a = c.vertices[e.v0], b = c.vertices[e.v1];
      if (b < a) std::swap(a, b);
      edges.insert({{a, b}, e.mult});
    }
    for (const auto& r : c.rays)
      rays.insert({c.vertices[r.base], r.dir, r.mult});
  }
  bool operator==(const CurveShape&) const = default;
};

CurveShape translated(const TropicalCurve& c, const Rational& dx,
                      const Rational& dy) {
  TropicalCurve t = c;
  for (auto& v : t.vertices) v = {v.x + dx, v.y + dy};
  return CurveShape(t);
}

}  // namespace

TEST_CASE("tropical line: one vertex, three rays") {
  const TropicalCurve c = curve(tropicalize(welt("L + M + 1")));
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0] == RPoint{Rational(0), Rational(0)});
  CHECK(c.edges.empty());
  REQUIRE(c.rays.size() == 3);
  std::set<std::pair<long, long>> dirs;
  for (const auto& r : c.rays) {
    CHECK(r.mult == 1);
    dirs.insert({r.dir.x, r.dir.y});
  }
  CHECK(dirs == std::set<std::pair<long, long>>{{1, 0}, {0, 1}, {-1, -1}});
}

TEST_CASE("binomial gives a vertexless line with the axis anchor rule") {
  const TropicalCurve c = curve(tropicalize(welt("L - q*M^2")));
  CHECK(c.vertices.empty());
  REQUIRE(c.lines.size() == 1);
  CHECK(c.lines[0].anchor == RPoint{Rational(0), rat(1, 2)});
  CHECK(c.lines[0].dir == Point2{2, 1});
  CHECK(c.lines[0].mult == 1);
}

TEST_CASE("point reflection is an involution and rotates the curve") {
  std::mt19937 rng(303);
  for (int it = 0; it < 60; ++it) {
    const TropicalPolynomial tp = random_tropical(rng, 8, false);
    const TropicalPolynomial rr = point_reflected(point_reflected(tp));
    CHECK(rr.terms == tp.terms);
    const TropicalCurve c = curve(tp);
    const TropicalCurve cr = curve(point_reflected(tp));
    std::set<RPoint> want;
    for (const auto& v : c.vertices) want.insert({-v.x, -v.y});
    CHECK(std::set<RPoint>(cr.vertices.begin(), cr.vertices.end()) == want);
  }
}

TEST_CASE("curve invariance under q-power and M-power factors") {
  std::mt19937 rng(404);
  for (int it = 0; it < 40; ++it) {
    WeylElement P = welt("0");
    while (P.poly().term_count() < 3) {
      const TropicalPolynomial tp = random_tropical(rng, 6, true);
      Polynomial p(weyl_vars());
      for (const auto& t : tp.terms)
        p.add_term({static_cast<int>(t.b.get_num().get_si()),
                    static_cast<int>(t.a.get_num().get_si()),
                    static_cast<int>(t.c.get_num().get_si())},
                   Rational(1));
      P = WeylElement(p);
    }
    const CurveShape base{curve(tropicalize(P))};
    // q^c P and M^a P leave the curve unchanged
    CHECK(CurveShape{curve(tropicalize(
              WeylElement(P.poly().shifted("q", 3))))} == base);
    CHECK(CurveShape{curve(tropicalize(
              WeylElement(P.poly().shifted("M", 2))))} == base);
    // left multiplication by L translates the curve up by one: the relation
    // L M^j = q^j M^j L adds j to each q-exponent
    const CurveShape lifted{
        curve(tropicalize(weyl_mul(welt("L"), P)))};
    CHECK(lifted == translated(curve(tropicalize(P)), 0, 1));
  }
}

TEST_CASE("balancing holds at every vertex of random curves") {
  std::mt19937 rng(505);
  for (int it = 0; it < 120; ++it) {
    const TropicalPolynomial tp = random_tropical(rng, 8, false);
    const BalanceReport rep = balancing_check(curve(tp));
    CHECK(rep.balanced);
    for (const auto& [dx, dy] : rep.defects) {
      CHECK(dx == 0);
      CHECK(dy == 0);
    }
  }
}

TEST_CASE("duality between curve and subdivision on random inputs") {
  std::mt19937 rng(606);
  for (int it = 0; it < 120; ++it) {
    const TropicalPolynomial tp = random_tropical(rng, 8, false);
    const RegularSubdivision sub = lower_subdivision(lift_config(tp));
    if (sub.dim < 2) continue;
    const DualityReport rep = duality_report(curve(tp), sub);
    CHECK(rep.ok);
  }
}

TEST_CASE("grid witnesses lie on the curve") {
  std::mt19937 rng(707);
  for (int it = 0; it < 60; ++it) {
    const TropicalPolynomial tp = random_tropical(rng, 8, false);
    const TropicalCurve c = curve(tp);
    const auto witnesses =
        curve_oracle(tp, Rational(-10), Rational(-10), Rational(10),
                     Rational(10), 20);
    for (const auto& w : witnesses) CHECK(curve_contains(c, w.p));
  }
}

TEST_CASE("eval reports exact minima and all attaining terms") {
  TropicalPolynomial tp;
  tp.terms = {{Rational(1), Rational(0), Rational(0)},
              {Rational(0), Rational(1), Rational(0)},
              {Rational(0), Rational(0), Rational(0)}};
  const TropicalEval at_origin = eval(tp, 0, 0);
  CHECK(at_origin.value == 0);
  CHECK(at_origin.argmin.size() == 3);
  const TropicalEval inside = eval(tp, 1, 2);
  CHECK(inside.value == 0);
  CHECK(inside.argmin == std::vector<std::size_t>{2});
}

TEST_CASE("curve construction requires integer exponents") {
  TropicalPolynomial tp;
  tp.terms = {{rat(1, 2), Rational(0), Rational(0)},
              {Rational(0), Rational(1), Rational(0)}};
  CHECK_THROWS_AS(curve(tp), std::domain_error);
}

TEST_CASE("curve_contains: vertices, edge midpoints, ray points") {
  std::mt19937 rng(808);
  for (int it = 0; it < 60; ++it) {
    const TropicalPolynomial tp = random_tropical(rng, 8, false);
    const TropicalCurve c = curve(tp);
    for (const auto& v : c.vertices) CHECK(curve_contains(c, v));
    for (const auto& e : c.edges) {
      const RPoint &a = c.vertices[e.v0], &b = c.vertices[e.v1];
      CHECK(curve_contains(c, {(a.x + b.x) / 2, (a.y + b.y) / 2}));
    }
    for (const auto& r : c.rays) {
      const RPoint& a = c.vertices[r.base];
      CHECK(curve_contains(
          c, {a.x + Rational(5 * r.dir.x), a.y + Rational(5 * r.dir.y)}));
    }
  }
}
