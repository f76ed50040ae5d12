#include "document.hpp"

#include <algorithm>
#include <numeric>

namespace qtrop::cli {

using nlohmann::json;

bool CurveDocument::operator==(const CurveDocument& o) const {
  const auto edge_eq = [](const CurveEdge& a, const CurveEdge& b) {
    return a.v0 == b.v0 && a.v1 == b.v1 && a.mult == b.mult;
  };
  const auto ray_eq = [](const CurveRay& a, const CurveRay& b) {
    return a.base == b.base && a.dir == b.dir && a.mult == b.mult;
  };
  const auto line_eq = [](const CurveLine& a, const CurveLine& b) {
    return a.anchor == b.anchor && a.dir == b.dir && a.mult == b.mult;
  };
  return vertices == o.vertices &&
         std::equal(edges.begin(), edges.end(), o.edges.begin(), o.edges.end(),
                    edge_eq) &&
         std::equal(rays.begin(), rays.end(), o.rays.begin(), o.rays.end(),
                    ray_eq) &&
         std::equal(lines.begin(), lines.end(), o.lines.begin(),
                    o.lines.end(), line_eq) &&
         source == o.source && good == o.good && polygon == o.polygon &&
         slopes == o.slopes;
}

std::string slope_string(const Slope& s) {
  if (s.den == 0) return "1/0";
  if (s.den == 1) return std::to_string(s.num);
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

CurveDocument make_document(const TropicalCurve& c, const WeylElement& P,
                            std::string source) {
  CurveDocument doc;
  doc.source = std::move(source);
  doc.good = is_good(P);
  doc.polygon = project_to_LM(support_3d(P));
  if (doc.polygon.dim >= 1)
    for (const auto& s : edge_slopes(doc.polygon))
      doc.slopes.push_back(slope_string(s));

  // sort vertices lexicographically and remap the incidences
  std::vector<std::size_t> order(c.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.vertices[a] < c.vertices[b];
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    doc.vertices.push_back(c.vertices[order[i]]);
  }
  for (const auto& e : c.edges) {
    CurveEdge out{rank[e.v0], rank[e.v1], e.mult};
    if (out.v1 < out.v0) std::swap(out.v0, out.v1);
    doc.edges.push_back(out);
  }
  std::sort(doc.edges.begin(), doc.edges.end(),
            [](const CurveEdge& a, const CurveEdge& b) {
              return std::tie(a.v0, a.v1, a.mult) <
                     std::tie(b.v0, b.v1, b.mult);
            });
  doc.rays = c.rays;
  for (auto& r : doc.rays) r.base = rank[r.base];
  std::sort(doc.rays.begin(), doc.rays.end(),
            [](const CurveRay& a, const CurveRay& b) {
              return std::tie(a.base, a.dir, a.mult) <
                     std::tie(b.base, b.dir, b.mult);
            });
  doc.lines = c.lines;
  std::sort(doc.lines.begin(), doc.lines.end(),
            [](const CurveLine& a, const CurveLine& b) {
              if (a.anchor < b.anchor) return true;
              if (b.anchor < a.anchor) return false;
              return std::tie(a.dir, a.mult) < std::tie(b.dir, b.mult);
            });
  return doc;
}

namespace {

json point_json(const RPoint& p) {
  return json::array({to_string(p.x), to_string(p.y)});
}

RPoint point_from(const json& j) {
  return {rational_from_string(j.at(0).get<std::string>()),
          rational_from_string(j.at(1).get<std::string>())};
}

}  // namespace

json to_json(const CurveDocument& doc) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) j["vertices"].push_back(point_json(v));
  j["edges"] = json::array();
  for (const auto& e : doc.edges)
    j["edges"].push_back({{"from", e.v0}, {"to", e.v1}, {"mult", e.mult}});
  j["rays"] = json::array();
  for (const auto& r : doc.rays)
    j["rays"].push_back({{"base", r.base},
                         {"dir", json::array({r.dir.x, r.dir.y})},
                         {"mult", r.mult}});
  j["lines"] = json::array();
  for (const auto& l : doc.lines)
    j["lines"].push_back({{"anchor", point_json(l.anchor)},
                          {"dir", json::array({l.dir.x, l.dir.y})},
                          {"mult", l.mult}});
  json poly = json::array();
  for (const auto& v : doc.polygon.vertices)
    poly.push_back(json::array({v.x, v.y}));
  j["metadata"] = {{"source", doc.source},
                   {"good", doc.good},
                   {"polygon", std::move(poly)},
                   {"polygon_dim", doc.polygon.dim},
                   {"slopes", doc.slopes}};
  return j;
}

CurveDocument document_from_json(const json& j) {
  CurveDocument doc;
  for (const auto& v : j.at("vertices")) doc.vertices.push_back(point_from(v));
  for (const auto& e : j.at("edges"))
    doc.edges.push_back({e.at("from").get<std::size_t>(),
                         e.at("to").get<std::size_t>(),
                         e.at("mult").get<long>()});
  for (const auto& r : j.at("rays"))
    doc.rays.push_back({r.at("base").get<std::size_t>(),
                        {r.at("dir").at(0).get<long>(),
                         r.at("dir").at(1).get<long>()},
                        r.at("mult").get<long>()});
  for (const auto& l : j.at("lines"))
    doc.lines.push_back({point_from(l.at("anchor")),
                         {l.at("dir").at(0).get<long>(),
                          l.at("dir").at(1).get<long>()},
                         l.at("mult").get<long>()});
  const auto& m = j.at("metadata");
  doc.source = m.at("source").get<std::string>();
  doc.good = m.at("good").get<bool>();
  doc.polygon.dim = m.value("polygon_dim", 2);
  for (const auto& v : m.at("polygon"))
    doc.polygon.vertices.push_back(
        {v.at(0).get<long>(), v.at(1).get<long>()});
  doc.slopes = m.at("slopes").get<std::vector<std::string>>();
  // index sanity
  for (const auto& e : doc.edges)
    if (e.v0 >= doc.vertices.size() || e.v1 >= doc.vertices.size())
      throw std::runtime_error("edge index out of range");
  for (const auto& r : doc.rays)
    if (r.base >= doc.vertices.size())
      throw std::runtime_error("ray base index out of range");
  return doc;
}

}  // namespace qtrop::cli
