#include "svg.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtrop::cli {

namespace {

// exact decimal with three places, round half away from zero
std::string decimal3(const Rational& r) {
  Rational scaled = r * 1000;
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  rem = abs(rem);
  if (rem * 2 >= den) q += (num < 0 ? -1 : 1);
  const bool neg = q < 0;
  Integer a = abs(q);
  Integer whole = a / 1000, frac = a % 1000;
  std::ostringstream out;
  if (neg && (whole != 0 || frac != 0)) out << '-';
  out << whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(0, 3 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out << '.' << f;
  }
  return out.str();
}

struct ParamRange {
  bool lo_inf = false, hi_inf = false;
  Rational lo = 0, hi = 0;
};

// Clip p + t*d against the window; returns the surviving t-interval.
std::optional<std::pair<Rational, Rational>> clip(
    const RPoint& p, const Rational& dx, const Rational& dy,
    const std::array<Rational, 4>& w, ParamRange range) {
  const auto cut = [&](const Rational& d, const Rational& lo_b,
                       const Rational& hi_b, const Rational& v) {
    if (d == 0) return v >= lo_b && v <= hi_b;
    const Rational t_at_lo = (lo_b - v) / d, t_at_hi = (hi_b - v) / d;
    const Rational tl = d > 0 ? t_at_lo : t_at_hi;
    const Rational th = d > 0 ? t_at_hi : t_at_lo;
    if (range.lo_inf || tl > range.lo) {
      range.lo = tl;
      range.lo_inf = false;
    }
    if (range.hi_inf || th < range.hi) {
      range.hi = th;
      range.hi_inf = false;
    }
    return true;
  };
  if (!cut(dx, w[0], w[2], p.x)) return std::nullopt;
  if (!cut(dy, w[1], w[3], p.y)) return std::nullopt;
  if (range.lo_inf || range.hi_inf)
    throw std::domain_error("unbounded element survives window clipping");
  if (range.lo > range.hi) return std::nullopt;
  return std::make_pair(range.lo, range.hi);
}

}  // namespace

std::array<Rational, 4> default_window(const CurveDocument& doc) {
  std::vector<RPoint> anchors = doc.vertices;
  for (const auto& l : doc.lines) anchors.push_back(l.anchor);
  if (anchors.empty()) return {Rational(-3), Rational(-3), Rational(3),
                               Rational(3)};
  Rational x0 = anchors[0].x, x1 = x0, y0 = anchors[0].y, y1 = y0;
  for (const auto& p : anchors) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return {x0 - 2, y0 - 2, x1 + 2, y1 + 2};
}

std::string render_svg(const CurveDocument& doc,
                       const std::array<Rational, 4>& window, long scale) {
  const Rational x0 = window[0], y0 = window[1], x1 = window[2],
                 y1 = window[3];
  if (!(x0 < x1) || !(y0 < y1)) throw std::domain_error("empty window");
  if (scale < 1) throw std::domain_error("scale must be positive");
  const long margin = 20;
  const auto px = [&](const Rational& x) {
    return decimal3(Rational(margin) + (x - x0) * scale);
  };
  // y axis points up: larger y maps to smaller pixel row
  const auto py = [&](const Rational& y) {
    return decimal3(Rational(margin) + (y1 - y) * scale);
  };
  const Rational wpx = Rational(2 * margin) + (x1 - x0) * scale;
  const Rational hpx = Rational(2 * margin) + (y1 - y0) * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << decimal3(wpx) << "\" height=\"" << decimal3(hpx)
      << "\" viewBox=\"0 0 " << decimal3(wpx) << ' ' << decimal3(hpx)
      << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << decimal3(wpx) << "\" height=\""
      << decimal3(hpx) << "\" fill=\"white\"/>\n";

  // lattice dots
  Integer ix0, ix1, iy0, iy1;
  mpz_cdiv_q(ix0.get_mpz_t(), x0.get_num().get_mpz_t(),
             x0.get_den().get_mpz_t());
  mpz_fdiv_q(ix1.get_mpz_t(), x1.get_num().get_mpz_t(),
             x1.get_den().get_mpz_t());
  mpz_cdiv_q(iy0.get_mpz_t(), y0.get_num().get_mpz_t(),
             y0.get_den().get_mpz_t());
  mpz_fdiv_q(iy1.get_mpz_t(), y1.get_num().get_mpz_t(),
             y1.get_den().get_mpz_t());
  for (Integer ix = ix0; ix <= ix1; ++ix)
    for (Integer iy = iy0; iy <= iy1; ++iy)
      svg << "<circle cx=\"" << px(Rational(ix)) << "\" cy=\""
          << py(Rational(iy)) << "\" r=\"1.5\" fill=\"#c8c8c8\"/>\n";

  const auto draw = [&](const RPoint& a, const RPoint& b, long mult) {
    svg << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
        << px(b.x) << "\" y2=\"" << py(b.y)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (mult > 1) {
      const Rational mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
      svg << "<text x=\"" << px(mx) << "\" y=\"" << py(my)
          << "\" dx=\"4\" dy=\"-4\" font-size=\"12\" "
             "font-family=\"sans-serif\">"
          << mult << "</text>\n";
    }
  };
  const auto at = [](const RPoint& p, const Rational& dx, const Rational& dy,
                     const Rational& t) {
    return RPoint{p.x + dx * t, p.y + dy * t};
  };

  for (const auto& e : doc.edges) {
    const RPoint &a = doc.vertices[e.v0], &b = doc.vertices[e.v1];
    ParamRange r{false, false, Rational(0), Rational(1)};
    if (auto seg = clip(a, b.x - a.x, b.y - a.y, window, r))
      draw(at(a, b.x - a.x, b.y - a.y, seg->first),
           at(a, b.x - a.x, b.y - a.y, seg->second), e.mult);
  }
  for (const auto& ray : doc.rays) {
    const RPoint& a = doc.vertices[ray.base];
    ParamRange r{false, true, Rational(0), Rational(0)};
    const Rational dx(ray.dir.x), dy(ray.dir.y);
    if (auto seg = clip(a, dx, dy, window, r))
      draw(at(a, dx, dy, seg->first), at(a, dx, dy, seg->second), ray.mult);
  }
  for (const auto& line : doc.lines) {
    ParamRange r{true, true, Rational(0), Rational(0)};
    const Rational dx(line.dir.x), dy(line.dir.y);
    if (auto seg = clip(line.anchor, dx, dy, window, r))
      draw(at(line.anchor, dx, dy, seg->first),
           at(line.anchor, dx, dy, seg->second), line.mult);
  }
  for (const auto& v : doc.vertices) {
    if (v.x < x0 || v.x > x1 || v.y < y0 || v.y > y1) continue;
    svg << "<circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y)
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qtrop::cli
