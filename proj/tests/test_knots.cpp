#include <doctest.h>

#include <set>

#include "qtrop/knots.hpp"

using namespace qtrop;

namespace {

std::set<RPoint> vertex_set(const WeylElement& op) {
  const TropicalCurve c = curve(knot_tropical(op));
  return {c.vertices.begin(), c.vertices.end()};
}

}  // namespace

TEST_CASE("shipped datasets are discoverable") {
  CHECK(list_knots() == std::vector<std::string>{"4_1", "5_2", "6_1"});
  CHECK_THROWS(load("9_99"));
}

TEST_CASE("term counts and degree metadata") {
  const KnotEntry k41 = load("4_1"), k52 = load("5_2"), k61 = load("6_1");
  CHECK(k41.nonhomogeneous_op.poly().term_count() == 22);
  CHECK(k52.nonhomogeneous_op.poly().term_count() == 98);
  CHECK(k61.nonhomogeneous_op.poly().term_count() == 346);
  // twist-knot degree formula at p = 2: (L, M, q)-degrees (3, 12, 19)
  CHECK(k52.twist_p == 2);
  const MetadataReport meta = metadata_check(k52, k52.twist_p);
  CHECK(meta.ok);
  CHECK(meta.degrees_checked);
  CHECK(meta.deg_L == 3);
  CHECK(meta.deg_M == 12);
  CHECK(meta.deg_q == 19);
  CHECK(metadata_check(k41, k41.twist_p).ok);
  CHECK(metadata_check(k61, k61.twist_p).ok);
}

TEST_CASE("all shipped operators are good") {
  std::vector<KnotEntry> all;
  for (const auto& n : list_knots()) all.push_back(load(n));
  const auto rows = goodness_table(all);
  CHECK(rows.size() == 4);  // 4_1 twice (both operators), 5_2, 6_1
  for (const auto& r : rows) CHECK(r.good);
}

TEST_CASE("classical limit of the homogeneous operator factors") {
  const AJReport rep = verify_aj_41(load("4_1"));
  CHECK(rep.exact);
}

TEST_CASE("polygon splits as factor polygon plus vertical segment") {
  const KnotEntry e = load("4_1");
  const ShiftReport rep = verify_vertical_shift(e);
  CHECK(rep.found);
  CHECK(rep.height == 3);
  // independent oracle: rebuild the Minkowski sum and compare edge slopes
  const Polynomial& geo = e.classical_factors.back();
  std::vector<Point2> pts;
  for (const auto& [ex, c] : geo.terms())
    pts.push_back({ex[geo.var_index("L")], ex[geo.var_index("M")]});
  const LatticePolygon factor = convex_hull(std::move(pts));
  const LatticePolygon target =
      project_to_LM(support_3d(e.nonhomogeneous_op));
  auto expected = edge_slopes(factor);
  expected.insert(make_slope(1, 0));
  CHECK(edge_slopes(target) == expected);
}

TEST_CASE("curves match the stored vertex lists") {
  for (const auto& name : list_knots()) {
    const KnotEntry e = load(name);
    CHECK(vertex_set(e.nonhomogeneous_op) ==
          std::set<RPoint>(e.expected_vertices_nh.begin(),
                           e.expected_vertices_nh.end()));
    if (e.homogeneous_op)
      CHECK(vertex_set(*e.homogeneous_op) ==
            std::set<RPoint>(e.expected_vertices_hom.begin(),
                             e.expected_vertices_hom.end()));
  }
}

TEST_CASE("recursion reproduces the shipped sequence values") {
  for (const auto& name : list_knots()) {
    const KnotEntry e = load(name);
    const RecursionSystem rec = knot_recursion(e);
    const long have = static_cast<long>(e.initial_values.size());
    const auto f = evaluate(rec, have - 1);
    REQUIRE(static_cast<long>(f.size()) == have);
    for (long n = 0; n < have; ++n)
      CHECK(f[n] == RationalFunction::from_qpoly(e.initial_values[n]));
  }
}

TEST_CASE("homogenized operator annihilates the sequence") {
  for (const auto& name : list_knots()) {
    const KnotEntry e = load(name);
    const WeylElement H = homogenize(e.nonhomogeneous_op, e.rhs);
    const int d = H.order();
    std::vector<RationalFunction> f;
    for (const auto& v : e.initial_values)
      f.push_back(RationalFunction::from_qpoly(v));
    REQUIRE(static_cast<int>(f.size()) > d);
    for (long n = 0; n + d < static_cast<long>(f.size()); ++n) {
      const std::vector<RationalFunction> w(f.begin() + n,
                                            f.begin() + n + d + 1);
      CHECK(apply(H, w, n).is_zero());
    }
  }
}

TEST_CASE("degree slopes are contained in the negated polygon slopes") {
  // modest N keeps this test quick; the acceptance gate runs N = 40
  const KnotEntry e = load("4_1");
  const Prop1Report rep =
      check_prop1(homogenize(e.nonhomogeneous_op, e.rhs), knot_recursion(e), 25);
  CHECK(rep.contained);
  CHECK(rep.sequence_slopes.finite == std::set<Rational>{Rational(2)});
}

TEST_CASE("loading by path works like loading by name") {
  const KnotEntry by_name = load("4_1");
  const KnotEntry by_path = load(data_dir() + "/4_1");
  CHECK(by_name.nonhomogeneous_op == by_path.nonhomogeneous_op);
  CHECK(by_name.rhs == by_path.rhs);
}
