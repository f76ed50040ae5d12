#include "qtrop/tropical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qtrop/weyl.hpp"

namespace qtrop {

TropicalPolynomial tropicalize(const WeylElement& P) {
  const LiftedConfiguration cfg = lift(P);
  TropicalPolynomial tp;
  for (const auto& [p, h] : cfg.heights)
    tp.terms.push_back({Rational(p.x), Rational(p.y), h});
  return tp;
}

TropicalPolynomial point_reflected(const TropicalPolynomial& tp) {
  TropicalPolynomial out;
  for (const auto& t : tp.terms) out.terms.push_back({-t.a, -t.b, t.c});
  return out;
}

TropicalEval eval(const TropicalPolynomial& tp, const Rational& x,
                  const Rational& y) {
  if (tp.terms.empty())
    throw std::invalid_argument("eval of empty tropical polynomial");
  TropicalEval out;
  for (std::size_t i = 0; i < tp.terms.size(); ++i) {
    const auto& t = tp.terms[i];
    const Rational v = t.a * x + t.b * y + t.c;
    if (out.argmin.empty() || v < out.value) {
      out.value = v;
      out.argmin = {i};
    } else if (v == out.value) {
      out.argmin.push_back(i);
    }
  }
  return out;
}

LiftedConfiguration lift_config(const TropicalPolynomial& tp) {
  if (tp.terms.empty())
    throw std::invalid_argument("empty tropical polynomial");
  std::vector<std::pair<Point2, Rational>> pts;
  for (const auto& t : tp.terms) {
    if (t.a.get_den() != 1 || t.b.get_den() != 1)
      throw std::domain_error("curve construction needs integer x,y slopes");
    pts.push_back({{t.a.get_num().get_si(), t.b.get_num().get_si()}, t.c});
  }
  return lift_points(pts);
}

namespace {

Point2 primitive(long dx, long dy) {
  const long g = std::gcd(std::abs(dx), std::abs(dy));
  return {dx / g, dy / g};
}

Point2 primitive(const Rational& dx, const Rational& dy) {
  // scale the rational vector to a primitive integer one
  Integer den;
  mpz_lcm(den.get_mpz_t(), dx.get_den().get_mpz_t(),
          dy.get_den().get_mpz_t());
  const Integer nx = dx.get_num() * (den / dx.get_den());
  const Integer ny = dy.get_num() * (den / dy.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  return {mpz_get_si(Integer(nx / g).get_mpz_t()),
          mpz_get_si(Integer(ny / g).get_mpz_t())};
}

// intersection of the agreement line of two lifted forms with a coordinate
// axis: smallest nonnegative intercept wins, x-axis preferred
RPoint line_anchor(const Point2& p1, const Point2& p2, const Rational& c1,
                   const Rational& c2) {
  // (a1-a2) x + (b1-b2) y + (c1-c2) = 0
  const Rational da(p1.x - p2.x), db(p1.y - p2.y), dc = c1 - c2;
  std::vector<std::pair<Rational, RPoint>> cand;
  if (da != 0) cand.push_back({-dc / da, {-dc / da, Rational(0)}});
  if (db != 0) cand.push_back({-dc / db, {Rational(0), -dc / db}});
  if (cand.empty()) throw std::logic_error("degenerate agreement line");
  for (const auto& [k, p] : cand)
    if (k >= 0) return p;
  return cand.front().second;
}

}  // namespace

TropicalCurve curve(const TropicalPolynomial& tp) {
  const LiftedConfiguration cfg = lift_config(tp);
  const RegularSubdivision sub = lower_subdivision(cfg);
  TropicalCurve out;

  if (sub.dim == 0) return out;  // single form, linear everywhere

  if (sub.dim == 1) {
    // no 2-cells: one vertexless line per lower-hull chain segment
    for (const auto& seg : sub.chain) {
      const Point2 d = primitive(seg.b.x - seg.a.x, seg.b.y - seg.a.y);
      Point2 n{-d.y, d.x};
      if (n.x < 0 || (n.x == 0 && n.y < 0)) n = {-n.x, -n.y};
      out.lines.push_back({line_anchor(seg.a, seg.b, cfg.heights.at(seg.a),
                                       cfg.heights.at(seg.b)),
                           n, lattice_length(seg.a, seg.b)});
    }
    return out;
  }

  // dual vertex of each 2-cell: all forms of the cell agree at (-alpha,-beta)
  std::map<RPoint, std::size_t> vindex;
  std::vector<std::size_t> cell_vertex(sub.cells.size());
  for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
    const auto& cell = sub.cells[ci];
    const RPoint v{-cell.alpha, -cell.beta};
    auto [it, fresh] = vindex.try_emplace(v, out.vertices.size());
    if (fresh) out.vertices.push_back(v);
    cell_vertex[ci] = it->second;
  }

  std::map<Segment, std::vector<std::size_t>> edge_cells;
  for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
    const auto& hull = sub.cells[ci].hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      Point2 u = hull[i], v = hull[(i + 1) % hull.size()];
      if (v < u) std::swap(u, v);
      edge_cells[{u, v}].push_back(ci);
    }
  }

  for (const auto& seg : sub.interior_edges) {
    const auto& cs = edge_cells.at(seg);
    const std::size_t v0 = cell_vertex[cs[0]], v1 = cell_vertex[cs[1]];
    if (v0 == v1) continue;  // collinear marked points: zero-length dual
    out.edges.push_back({v0, v1, lattice_length(seg.a, seg.b)});
  }

  for (const auto& seg : sub.boundary_edges) {
    const std::size_t ci = edge_cells.at(seg).front();
    const auto& cell = sub.cells[ci];
    Point2 d = primitive(seg.b.x - seg.a.x, seg.b.y - seg.a.y);
    Point2 n{-d.y, d.x};
    // other forms of the cell must grow along the ray
    Point2 third{};
    bool found = false;
    for (const auto& p : cell.marked) {
      if (cross(seg.a, seg.b, p) != 0) {
        third = p;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("boundary edge cell is degenerate");
    const long dot = (third.x - seg.a.x) * n.x + (third.y - seg.a.y) * n.y;
    if (dot < 0) n = {-n.x, -n.y};
    out.rays.push_back({cell_vertex[ci], n, lattice_length(seg.a, seg.b)});
  }
  return out;
}

BalanceReport balancing_check(const TropicalCurve& c) {
  BalanceReport rep;
  rep.defects.assign(c.vertices.size(), {0, 0});
  for (const auto& e : c.edges) {
    const RPoint &a = c.vertices[e.v0], &b = c.vertices[e.v1];
    const Point2 d = primitive(b.x - a.x, b.y - a.y);
    rep.defects[e.v0].first += e.mult * d.x;
    rep.defects[e.v0].second += e.mult * d.y;
    rep.defects[e.v1].first -= e.mult * d.x;
    rep.defects[e.v1].second -= e.mult * d.y;
  }
  for (const auto& r : c.rays) {
    rep.defects[r.base].first += r.mult * r.dir.x;
    rep.defects[r.base].second += r.mult * r.dir.y;
  }
  for (const auto& [dx, dy] : rep.defects)
    if (dx != 0 || dy != 0) rep.balanced = false;
  return rep;
}

bool curve_contains(const TropicalCurve& c, const RPoint& p) {
  const auto collinear = [](const RPoint& a, const Point2& d, const RPoint& q) {
    return (q.x - a.x) * d.y == (q.y - a.y) * d.x;
  };
  for (const auto& e : c.edges) {
    const RPoint &a = c.vertices[e.v0], &b = c.vertices[e.v1];
    const Rational dx = b.x - a.x, dy = b.y - a.y;
    if ((p.x - a.x) * dy != (p.y - a.y) * dx) continue;
    // between the endpoints?
    const Rational t = dx != 0 ? (p.x - a.x) * (b.x - a.x)
                               : (p.y - a.y) * (b.y - a.y);
    const Rational len = dx != 0 ? dx * dx : dy * dy;
    if (t >= 0 && t <= len) return true;
  }
  for (const auto& r : c.rays) {
    const RPoint& a = c.vertices[r.base];
    if (!collinear(a, r.dir, p)) continue;
    const Rational t = r.dir.x != 0 ? (p.x - a.x) * r.dir.x
                                    : (p.y - a.y) * r.dir.y;
    if (t >= 0) return true;
  }
  for (const auto& l : c.lines)
    if (collinear(l.anchor, l.dir, p)) return true;
  return false;
}

std::vector<GridWitness> curve_oracle(const TropicalPolynomial& tp,
                                      const Rational& x0, const Rational& y0,
                                      const Rational& x1, const Rational& y1,
                                      int grid) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  std::vector<GridWitness> out;
  const Rational sx = (x1 - x0) / grid, sy = (y1 - y0) / grid;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const Rational x = x0 + sx * i, y = y0 + sy * j;
      TropicalEval ev = eval(tp, x, y);
      if (ev.argmin.size() >= 2)
        out.push_back({{x, y}, std::move(ev.argmin)});
    }
  }
  return out;
}

DualityReport duality_report(const TropicalCurve& c,
                             const RegularSubdivision& s) {
  DualityReport rep;
  rep.vertices = c.vertices.size();
  rep.two_cells = s.cells.size();
  std::set<RPoint> dual;
  for (const auto& cell : s.cells) dual.insert({-cell.alpha, -cell.beta});
  rep.merged_cells = dual.size();
  rep.bounded_edges = c.edges.size();
  rep.interior_edges = s.interior_edges.size();
  rep.rays = c.rays.size();
  rep.boundary_edges = s.boundary_edges.size();
  if (rep.vertices != rep.two_cells)
    rep.mismatches.push_back("vertex count != 2-cell count");
  if (rep.bounded_edges != rep.interior_edges)
    rep.mismatches.push_back("bounded-edge count != interior-edge count");
  if (rep.rays != rep.boundary_edges)
    rep.mismatches.push_back("ray count != boundary-edge count");
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace qtrop
