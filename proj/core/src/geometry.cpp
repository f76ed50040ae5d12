#include "qtrop/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "qtrop/weyl.hpp"

namespace qtrop {

long cross(const Point2& a, const Point2& b, const Point2& c) {
  const long x1 = b.x - a.x, y1 = b.y - a.y;
  const long x2 = c.x - a.x, y2 = c.y - a.y;
  return x1 * y2 - y1 * x2;
}

namespace {

// rotate so the lexicographically smallest vertex comes first
void canonicalize_cycle(std::vector<Point2>& v) {
  if (v.empty()) return;
  auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
}

}  // namespace

LatticePolygon convex_hull(std::vector<Point2> pts) {
  LatticePolygon out;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("hull of empty point set");
  if (pts.size() == 1) {
    out.dim = 0;
    out.vertices = pts;
    return out;
  }
  // monotone chain, strict turns (collinear points dropped)
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  if (h.size() == 2) {
    out.dim = 1;
    out.vertices = {h[0], h[1]};
    if (out.vertices[1] < out.vertices[0])
      std::swap(out.vertices[0], out.vertices[1]);
    return out;
  }
  if (h.size() < 2) {  // all collinear: monotone chain keeps extremes
    out.dim = 1;
    out.vertices = {pts.front(), pts.back()};
    return out;
  }
  out.dim = 2;
  out.vertices = std::move(h);
  canonicalize_cycle(out.vertices);
  return out;
}

bool polygon_contains(const LatticePolygon& poly, const Point2& p) {
  if (poly.dim == 0) return poly.vertices[0] == p;
  if (poly.dim == 1) {
    const Point2 &a = poly.vertices[0], &b = poly.vertices[1];
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly.vertices[i], poly.vertices[(i + 1) % n], p) < 0)
      return false;
  }
  return true;
}

std::vector<LatticePoint3> support_3d(const WeylElement& P) {
  if (P.is_zero()) throw std::domain_error("support of zero operator");
  std::vector<LatticePoint3> pts;
  for (const auto& [e, c] : P.poly().terms())
    pts.push_back({e[1], e[0], e[2]});  // alphabet is (M, L, q)
  std::sort(pts.begin(), pts.end());
  return pts;
}

namespace {

struct Lifted {
  Point2 p;
  Rational h;
};

// is D strictly below the plane through A,B,C (A,B,C counterclockwise in 2D)?
int side_of_plane(const Lifted& A, const Lifted& B, const Lifted& C,
                  const Lifted& D) {
  // normal n = (B-A) x (C-A); n_z = cross2d > 0, so "above" = dot(n, D-A) > 0
  const Rational ux = B.p.x - A.p.x, uy = B.p.y - A.p.y, uz = B.h - A.h;
  const Rational vx = C.p.x - A.p.x, vy = C.p.y - A.p.y, vz = C.h - A.h;
  const Rational nx = uy * vz - uz * vy;
  const Rational ny = uz * vx - ux * vz;
  const Rational nz = ux * vy - uy * vx;
  const Rational dot = nx * Rational(D.p.x - A.p.x) +
                       ny * Rational(D.p.y - A.p.y) + nz * (D.h - A.h);
  return dot > 0 ? 1 : (dot < 0 ? -1 : 0);
}

// 1D lower hull over a parameterized line: points (t, h), returns breakpoint
// indices in t-order.
std::vector<std::size_t> lower_hull_1d(
    const std::vector<std::pair<long, Rational>>& th) {
  std::vector<std::size_t> order(th.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return th[a].first < th[b].first;
  });
  std::vector<std::size_t> hull;
  for (std::size_t idx : order) {
    while (hull.size() >= 2) {
      const auto& [t1, h1] = th[hull[hull.size() - 2]];
      const auto& [t2, h2] = th[hull[hull.size() - 1]];
      const auto& [t3, h3] = th[idx];
      // keep if (t2,h2) strictly below segment (t1,h1)-(t3,h3)
      const Rational lhs = (h2 - h1) * Rational(t3 - t1);
      const Rational rhs = (h3 - h1) * Rational(t2 - t1);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(idx);
  }
  return hull;
}

}  // namespace

std::vector<LatticePoint3> newton_polytope_3d(const WeylElement& P) {
  const auto pts = support_3d(P);
  if (pts.size() <= 2) return pts;

  std::vector<Point2> proj;
  std::map<Point2, std::pair<long, long>> krange;  // min, max
  for (const auto& p : pts) {
    const Point2 q{p.l, p.m};
    proj.push_back(q);
    auto it = krange.find(q);
    if (it == krange.end())
      krange[q] = {p.k, p.k};
    else {
      it->second.first = std::min(it->second.first, p.k);
      it->second.second = std::max(it->second.second, p.k);
    }
  }
  const LatticePolygon hull2 = convex_hull(proj);
  std::set<LatticePoint3> verts;

  if (hull2.dim <= 1) {
    // polytope lives in a vertical plane: 2D hull in (t, k) coordinates
    const Point2 a = hull2.vertices[0];
    const Point2 b = hull2.dim == 0 ? a : hull2.vertices[1];
    long dx = b.x - a.x, dy = b.y - a.y;
    std::vector<Point2> tk;
    std::map<Point2, LatticePoint3> back;
    for (const auto& p : pts) {
      const long t = (p.l - a.x) * dx + (p.m - a.y) * dy;
      tk.push_back({t, p.k});
      back[{t, p.k}] = p;
    }
    const LatticePolygon h = convex_hull(tk);
    for (const auto& v : h.vertices) verts.insert(back[v]);
    return {verts.begin(), verts.end()};
  }

  // lower and upper hull facet vertices
  for (const bool upper : {false, true}) {
    std::vector<std::pair<Point2, Rational>> lift_pts;
    for (const auto& [q, mm] : krange)
      lift_pts.push_back({q, Rational(upper ? -mm.second : mm.first)});
    const RegularSubdivision sub = lower_subdivision(lift_points(lift_pts));
    for (const auto& cell : sub.cells) {
      for (const auto& v : cell.hull) {
        const auto& mm = krange[v];
        verts.insert({v.x, v.y, upper ? mm.second : mm.first});
      }
    }
  }
  // vertical faces above the 2D hull edges
  const std::size_t n = hull2.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = hull2.vertices[i];
    const Point2 b = hull2.vertices[(i + 1) % n];
    std::vector<Point2> tk;
    std::map<Point2, LatticePoint3> back;
    for (const auto& p : pts) {
      const Point2 q{p.l, p.m};
      if (cross(a, b, q) != 0) continue;
      if (q.x < std::min(a.x, b.x) || q.x > std::max(a.x, b.x) ||
          q.y < std::min(a.y, b.y) || q.y > std::max(a.y, b.y))
        continue;
      const long t = (p.l - a.x) * (b.x - a.x) + (p.m - a.y) * (b.y - a.y);
      tk.push_back({t, p.k});
      back[{t, p.k}] = p;
    }
    const LatticePolygon h = convex_hull(tk);
    for (const auto& v : h.vertices) verts.insert(back[v]);
  }
  return {verts.begin(), verts.end()};
}

LatticePolygon project_to_LM(const std::vector<LatticePoint3>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  std::vector<Point2> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back({p.l, p.m});
  return convex_hull(std::move(proj));
}

LatticePolygon polygon_at_q1(const WeylElement& P) {
  if (P.is_zero()) throw std::domain_error("zero operator");
  const Polynomial at1 = P.poly().substitute(
      {{"q", Polynomial::constant(weyl_vars(), 1)}});
  if (at1.is_zero())
    throw std::domain_error("operator vanishes at q = 1");
  return project_to_LM(support_3d(WeylElement(at1)));
}

bool is_good(const WeylElement& P) {
  const LatticePolygon n0 = project_to_LM(support_3d(P));
  const LatticePolygon n1 = polygon_at_q1(P);
  // the containment N_{P,1} within N_{P,0} must always hold
  for (const auto& v : n1.vertices) {
    if (!polygon_contains(n0, v))
      throw std::logic_error("N_{P,1} escapes N_{P,0}");
  }
  return n0 == n1;
}

LiftedConfiguration lift(const WeylElement& P) {
  if (P.is_zero()) throw std::domain_error("lift of zero operator");
  LiftedConfiguration cfg;
  for (const auto& [e, c] : P.poly().terms()) {
    const Point2 p{e[1], e[0]};  // (L-exp, M-exp)
    const Rational h(-e[2]);
    auto it = cfg.heights.find(p);
    if (it == cfg.heights.end() || h < it->second) cfg.heights[p] = h;
    cfg.provenance[p].push_back(e[2]);
  }
  return cfg;
}

LiftedConfiguration lift_points(
    const std::vector<std::pair<Point2, Rational>>& pts) {
  LiftedConfiguration cfg;
  for (const auto& [p, h] : pts) {
    auto it = cfg.heights.find(p);
    if (it == cfg.heights.end() || h < it->second) cfg.heights[p] = h;
  }
  return cfg;
}

RegularSubdivision lower_subdivision(const LiftedConfiguration& cfg) {
  if (cfg.heights.empty())
    throw std::invalid_argument("empty lifted configuration");
  RegularSubdivision out;
  std::vector<Lifted> pts;
  std::vector<Point2> proj;
  for (const auto& [p, h] : cfg.heights) {
    pts.push_back({p, h});
    proj.push_back(p);
  }
  out.outline = convex_hull(proj);
  out.dim = out.outline.dim;

  if (out.dim == 0) return out;

  if (out.dim == 1) {
    const Point2 a = out.outline.vertices[0], b = out.outline.vertices[1];
    const long dx = b.x - a.x, dy = b.y - a.y;
    std::vector<std::pair<long, Rational>> th;
    for (const auto& lp : pts)
      th.push_back({(lp.p.x - a.x) * dx + (lp.p.y - a.y) * dy, lp.h});
    const auto hull = lower_hull_1d(th);
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
      Point2 u = pts[hull[i]].p, v = pts[hull[i + 1]].p;
      if (v < u) std::swap(u, v);
      out.chain.push_back({u, v});
    }
    return out;
  }

  // 2D: gift-wrap the lower facets, seeded from the boundary walls.
  struct DirEdge {
    Point2 a, b;
    auto operator<=>(const DirEdge&) const = default;
  };
  std::map<Point2, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].p] = i;

  std::vector<DirEdge> queue;
  std::set<DirEdge> queued;
  std::set<Segment> wall_edges;
  const auto& hv = out.outline.vertices;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const Point2 a = hv[i], b = hv[(i + 1) % hv.size()];
    // 1D lower hull along the wall a -> b (counterclockwise, interior left)
    std::vector<std::pair<long, Rational>> th;
    std::vector<Point2> who;
    for (const auto& lp : pts) {
      if (cross(a, b, lp.p) != 0) continue;
      if (lp.p.x < std::min(a.x, b.x) || lp.p.x > std::max(a.x, b.x) ||
          lp.p.y < std::min(a.y, b.y) || lp.p.y > std::max(a.y, b.y))
        continue;
      th.push_back({(lp.p.x - a.x) * (b.x - a.x) + (lp.p.y - a.y) * (b.y - a.y),
                    lp.h});
      who.push_back(lp.p);
    }
    const auto hull = lower_hull_1d(th);
    for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
      const DirEdge e{who[hull[j]], who[hull[j + 1]]};
      if (queued.insert(e).second) queue.push_back(e);
      Point2 u = e.a, v = e.b;
      if (v < u) std::swap(u, v);
      wall_edges.insert({u, v});
    }
  }

  std::set<std::vector<Point2>> seen_cells;
  std::map<Segment, int> edge_count;
  while (!queue.empty()) {
    const DirEdge e = queue.back();
    queue.pop_back();
    const Lifted A = pts[index[e.a]], B = pts[index[e.b]];
    // best fold among points strictly to the left of a -> b
    int best = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (cross(e.a, e.b, pts[i].p) <= 0) continue;
      if (best < 0 ||
          side_of_plane(A, B, pts[best], pts[i]) < 0)
        best = static_cast<int>(i);
    }
    if (best < 0)
      throw std::logic_error("lower hull wavefront escaped the outline");
    const Lifted C = pts[best];
    // facet = every point exactly on the supporting plane
    std::vector<Point2> marked;
    for (const auto& lp : pts) {
      const int s = side_of_plane(A, B, C, lp);
      if (s < 0) throw std::logic_error("plane is not lower-supporting");
      if (s == 0) marked.push_back(lp.p);
    }
    std::sort(marked.begin(), marked.end());
    if (!seen_cells.insert(marked).second) continue;

    SubdivisionCell cell;
    cell.marked = marked;
    cell.hull = convex_hull(marked).vertices;
    {
      // plane coefficients from A, B, C: h = alpha x + beta y + gamma
      const Rational ux = B.p.x - A.p.x, uy = B.p.y - A.p.y, uz = B.h - A.h;
      const Rational vx = C.p.x - A.p.x, vy = C.p.y - A.p.y, vz = C.h - A.h;
      const Rational nx = uy * vz - uz * vy;
      const Rational ny = uz * vx - ux * vz;
      const Rational nz = ux * vy - uy * vx;
      // n . (P - A') = 0  =>  h = (-nx x - ny y + n.A') / nz
      cell.alpha = -nx / nz;
      cell.beta = -ny / nz;
      cell.gamma = A.h - cell.alpha * Rational(A.p.x) -
                   cell.beta * Rational(A.p.y);
    }
    const std::size_t n = cell.hull.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 u = cell.hull[i], v = cell.hull[(i + 1) % n];
      Point2 su = u, sv = v;
      if (sv < su) std::swap(su, sv);
      ++edge_count[{su, sv}];
      if (!wall_edges.count({su, sv})) {
        const DirEdge rev{v, u};
        if (queued.insert(rev).second) queue.push_back(rev);
      }
    }
    out.cells.push_back(std::move(cell));
  }

  for (const auto& [seg, cnt] : edge_count) {
    if (cnt == 1) {
      if (!wall_edges.count(seg))
        throw std::logic_error("dangling interior edge in subdivision");
      out.boundary_edges.push_back(seg);
    } else if (cnt == 2) {
      out.interior_edges.push_back(seg);
    } else {
      throw std::logic_error("subdivision edge shared by >2 cells");
    }
  }
  return out;
}

namespace {

// vectors sorted counterclockwise starting from the positive x-axis
bool angle_less(const Point2& a, const Point2& b) {
  const int ha = (a.y < 0 || (a.y == 0 && a.x < 0)) ? 1 : 0;
  const int hb = (b.y < 0 || (b.y == 0 && b.x < 0)) ? 1 : 0;
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

std::vector<Point2> edge_vectors(const LatticePolygon& p) {
  std::vector<Point2> out;
  if (p.dim == 1) {
    const long dx = p.vertices[1].x - p.vertices[0].x;
    const long dy = p.vertices[1].y - p.vertices[0].y;
    out.push_back({dx, dy});
    out.push_back({-dx, -dy});
    return out;
  }
  if (p.dim == 2) {
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({p.vertices[(i + 1) % n].x - p.vertices[i].x,
                     p.vertices[(i + 1) % n].y - p.vertices[i].y});
    }
  }
  return out;
}

Point2 bottom_left(const LatticePolygon& p) {
  Point2 best = p.vertices[0];
  for (const auto& v : p.vertices)
    if (v.y < best.y || (v.y == best.y && v.x < best.x)) best = v;
  return best;
}

}  // namespace

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  std::vector<Point2> edges = edge_vectors(a);
  const auto eb = edge_vectors(b);
  edges.insert(edges.end(), eb.begin(), eb.end());
  std::stable_sort(edges.begin(), edges.end(), angle_less);
  const Point2 s0 = bottom_left(a), s1 = bottom_left(b);
  Point2 cur{s0.x + s1.x, s0.y + s1.y};
  std::vector<Point2> vertices = {cur};
  for (const auto& e : edges) {
    cur = {cur.x + e.x, cur.y + e.y};
    vertices.push_back(cur);
  }
  return convex_hull(std::move(vertices));
}

Slope make_slope(long dm, long dl) {
  if (dl == 0) {
    if (dm == 0) throw std::invalid_argument("slope of a zero vector");
    return {1, 0};  // the distinguished vertical slope 1/0
  }
  long g = std::gcd(std::abs(dm), std::abs(dl));
  dm /= g;
  dl /= g;
  if (dl < 0) {
    dm = -dm;
    dl = -dl;
  }
  return {dm, dl};
}

std::set<Slope> edge_slopes(const LatticePolygon& p) {
  if (p.dim == 0) throw std::domain_error("slopes of a point polygon");
  std::set<Slope> out;
  if (p.dim == 1) {
    out.insert(make_slope(p.vertices[1].y - p.vertices[0].y,
                          p.vertices[1].x - p.vertices[0].x));
    return out;
  }
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(make_slope(p.vertices[(i + 1) % n].y - p.vertices[i].y,
                          p.vertices[(i + 1) % n].x - p.vertices[i].x));
  }
  return out;
}

long lattice_length(const Point2& a, const Point2& b) {
  return std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
}

}  // namespace qtrop
