#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qtrop/geometry.hpp"
#include "qtrop/tropical.hpp"
#include "qtrop/weyl.hpp"

namespace qtrop::cli {

// Serializable view of a tropical curve plus provenance metadata. Vertices
// are sorted lexicographically by (x, y) as exact rationals, so the emitted
// JSON is deterministic.
struct CurveDocument {
  std::vector<RPoint> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
  std::vector<CurveLine> lines;
  std::string source;
  bool good = false;
  LatticePolygon polygon;            // N_{P,0}
  std::vector<std::string> slopes;   // edge slopes, "p/q" or "1/0"

  bool operator==(const CurveDocument& o) const;
};

CurveDocument make_document(const TropicalCurve& c, const WeylElement& P,
                            std::string source);

nlohmann::json to_json(const CurveDocument& doc);
CurveDocument document_from_json(const nlohmann::json& j);

std::string slope_string(const Slope& s);

}  // namespace qtrop::cli
