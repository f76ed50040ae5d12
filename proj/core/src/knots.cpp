#include "qtrop/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace qtrop {

std::string data_dir() {
  if (const char* env = std::getenv("QTROP_DATA_DIR"); env && *env)
    return env;
  return QTROP_SOURCE_DATA_DIR;
}

std::vector<std::string> list_knots() {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(data_dir())) {
    if (entry.is_directory() && fs::exists(entry.path() / "meta.txt"))
      out.push_back(entry.path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DataFile {
  std::string knot, role;
  std::vector<std::string> vars;
  std::string body;
};

DataFile read_data_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  DataFile f;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("knot: ", 0) == 0) {
      f.knot = line.substr(6);
    } else if (line.rfind("role: ", 0) == 0) {
      f.role = line.substr(6);
    } else if (line.rfind("vars: ", 0) == 0) {
      std::istringstream vs(line.substr(6));
      std::string v;
      while (vs >> v) f.vars.push_back(v);
    } else {
      f.body += line;
      f.body += ' ';
    }
  }
  if (f.role.empty() || f.vars.empty())
    throw std::runtime_error("malformed dataset file " + path.string());
  return f;
}

// parse in the file's own alphabet, then re-express over (M, L, q)
Polynomial parse_in_weyl_alphabet(const DataFile& f) {
  const Polynomial raw = parse_poly(f.body, f.vars);
  std::map<std::string, Polynomial> into;
  for (const auto& v : f.vars) {
    if (Polynomial(weyl_vars()).var_index(v) < 0)
      throw std::runtime_error("dataset variable outside (M, L, q): " + v);
    into.emplace(v, Polynomial::variable(weyl_vars(), v));
  }
  return raw.substitute(into);
}

RPoint parse_vertex(const std::string& s) {
  // "(x,y)" with rational coordinates
  const auto comma = s.find(',');
  if (s.empty() || s.front() != '(' || s.back() != ')' ||
      comma == std::string::npos)
    throw std::runtime_error("bad vertex spec: " + s);
  return {rational_from_string(s.substr(1, comma - 1)),
          rational_from_string(s.substr(comma + 1, s.size() - comma - 2))};
}

}  // namespace

TropicalPolynomial knot_tropical(const WeylElement& P) {
  return point_reflected(tropicalize(P));
}

RecursionSystem knot_recursion(const KnotEntry& e) {
  const int d = e.nonhomogeneous_op.order();
  if (static_cast<int>(e.initial_values.size()) < d)
    throw std::runtime_error("not enough initial values for " + e.name);
  std::vector<RationalFunction> init;
  for (int i = 0; i < d; ++i)
    init.push_back(RationalFunction::from_qpoly(e.initial_values[i]));
  return make_recursion(e.nonhomogeneous_op, e.rhs, std::move(init));
}

KnotEntry load(const std::string& name) {
  fs::path dir(name);
  if (!dir.is_absolute() && name.find('/') == std::string::npos)
    dir = fs::path(data_dir()) / name;
  if (!fs::exists(dir / "meta.txt"))
    throw std::runtime_error("unknown knot dataset: " + name);

  KnotEntry e;
  e.name = dir.filename().string();

  std::ifstream meta(dir / "meta.txt");
  std::string line;
  while (std::getline(meta, line)) {
    if (line.rfind("term_count: ", 0) == 0)
      e.expected_term_count = std::stoi(line.substr(12));
    else if (line.rfind("twist_p: ", 0) == 0)
      e.twist_p = std::stoi(line.substr(9));
    else if (line.rfind("vertex_nh: ", 0) == 0)
      e.expected_vertices_nh.push_back(parse_vertex(line.substr(11)));
    else if (line.rfind("vertex_hom: ", 0) == 0)
      e.expected_vertices_hom.push_back(parse_vertex(line.substr(12)));
  }

  std::map<int, QPoly> init;
  std::map<int, Polynomial> factors;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().filename() == "meta.txt" ||
        entry.path().extension() != ".txt")
      continue;
    const DataFile f = read_data_file(entry.path());
    if (f.knot != e.name)
      throw std::runtime_error("knot name mismatch in " +
                               entry.path().string());
    if (f.role == "nonhomogeneous_op") {
      e.nonhomogeneous_op = WeylElement(parse_in_weyl_alphabet(f));
    } else if (f.role == "homogeneous_op") {
      e.homogeneous_op = WeylElement(parse_in_weyl_alphabet(f));
    } else if (f.role == "rhs") {
      e.rhs = parse_in_weyl_alphabet(f);
    } else if (f.role.rfind("factor:", 0) == 0) {
      factors[std::stoi(f.role.substr(7))] = parse_poly(f.body, f.vars);
    } else if (f.role.rfind("initial_value:", 0) == 0) {
      init[std::stoi(f.role.substr(14))] =
          QPoly::from_poly(parse_poly(f.body, {"q"}));
    } else {
      throw std::runtime_error("unknown dataset role: " + f.role);
    }
  }
  for (const auto& [i, p] : factors) e.classical_factors.push_back(p);
  for (int i = 0; init.count(i); ++i) e.initial_values.push_back(init[i]);

  if (e.nonhomogeneous_op.is_zero())
    throw std::runtime_error("dataset " + e.name + " lacks an operator");
  if (static_cast<int>(e.nonhomogeneous_op.poly().term_count()) !=
      e.expected_term_count)
    throw std::runtime_error("term count mismatch for " + e.name);

  // annihilation check on the shipped window
  const RecursionSystem rec = knot_recursion(e);
  const int d = rec.order;
  const long have = static_cast<long>(e.initial_values.size());
  std::vector<RationalFunction> f;
  for (const auto& v : e.initial_values)
    f.push_back(RationalFunction::from_qpoly(v));
  for (long n = 0; n + d < have; ++n) {
    std::vector<RationalFunction> window(f.begin() + n, f.begin() + n + d + 1);
    const RationalFunction got = apply(e.nonhomogeneous_op, window, n);
    if (!(got == RationalFunction::from_qpoly(eval_at_qn(e.rhs, n))))
      throw std::runtime_error("annihilation mismatch for " + e.name +
                               " at n = " + std::to_string(n));
  }
  return e;
}

AJReport verify_aj_41(const KnotEntry& e) {
  if (!e.homogeneous_op || e.classical_factors.empty())
    throw std::runtime_error("no homogeneous operator / factors for " +
                             e.name);
  AJReport rep;
  const Polynomial limit = e.homogeneous_op->poly().substitute(
      {{"q", Polynomial::constant(weyl_vars(), 1)}});
  Polynomial prod = Polynomial::constant(weyl_vars(), 1);
  for (const auto& fac : e.classical_factors) {
    std::map<std::string, Polynomial> into;
    for (const auto& v : fac.vars())
      into.emplace(v, Polynomial::variable(weyl_vars(), v));
    prod = prod * fac.substitute(into);
  }
  rep.exact = limit == prod;
  if (!rep.exact && !limit.is_zero()) {
    // same up to a unit monomial c * M^a L^b?
    const auto& [e1, c1] = *limit.terms().begin();
    const auto& [e2, c2] = *prod.terms().begin();
    Exponents shift = {e2[0] - e1[0], e2[1] - e1[1], e2[2] - e1[2]};
    const Polynomial mono =
        Polynomial::monomial(weyl_vars(), shift, c2 / c1);
    rep.up_to_monomial = (limit * mono == prod);
  }
  return rep;
}

namespace {

LatticePolygon normalized(const LatticePolygon& p, Point2* base = nullptr) {
  Point2 lo = p.vertices[0];
  for (const auto& v : p.vertices) lo = std::min(lo, v);
  LatticePolygon out = p;
  for (auto& v : out.vertices) v = {v.x - lo.x, v.y - lo.y};
  if (base) *base = lo;
  return out;
}

}  // namespace

ShiftReport verify_vertical_shift(const KnotEntry& e) {
  ShiftReport rep;
  if (e.classical_factors.empty()) return rep;
  // the geometric factor is the last stored one (the non-cyclotomic part)
  const Polynomial& geo = e.classical_factors.back();
  const int li = geo.var_index("L") >= 0 ? geo.var_index("L") : -1;
  const int mi = geo.var_index("M");
  std::vector<Point2> pts;
  for (const auto& [ex, c] : geo.terms())
    pts.push_back({li >= 0 ? ex[li] : 0, mi >= 0 ? ex[mi] : 0});
  const LatticePolygon factor_poly = convex_hull(std::move(pts));
  const LatticePolygon target =
      project_to_LM(support_3d(e.nonhomogeneous_op));

  const long maxh = target.vertices.empty()
                        ? 0
                        : [&] {
                            long lo = target.vertices[0].y, hi = lo;
                            for (const auto& v : target.vertices) {
                              lo = std::min(lo, v.y);
                              hi = std::max(hi, v.y);
                            }
                            return hi - lo;
                          }();
  const LatticePolygon tnorm = normalized(target);
  for (long h = 0; h <= maxh; ++h) {
    LatticePolygon seg;
    if (h == 0) {
      seg.dim = 0;
      seg.vertices = {{0, 0}};
    } else {
      seg.dim = 1;
      seg.vertices = {{0, 0}, {0, h}};
    }
    Point2 base{};
    const LatticePolygon sum = normalized(minkowski_sum(factor_poly, seg));
    if (sum == tnorm) {
      rep.found = true;
      rep.height = h;
      normalized(factor_poly, &base);
      rep.offset = base;
      return rep;
    }
  }
  return rep;
}

std::vector<GoodnessRow> goodness_table(
    const std::vector<KnotEntry>& entries) {
  std::vector<GoodnessRow> rows;
  for (const auto& e : entries) {
    rows.push_back({e.name, "nonhomogeneous", is_good(e.nonhomogeneous_op)});
    if (e.homogeneous_op)
      rows.push_back({e.name, "homogeneous", is_good(*e.homogeneous_op)});
  }
  return rows;
}

MetadataReport metadata_check(const KnotEntry& e, int p) {
  MetadataReport rep;
  const Polynomial& op = e.nonhomogeneous_op.poly();
  rep.term_count = static_cast<int>(op.term_count());
  rep.deg_L = op.degree_in("L");
  rep.deg_M = op.degree_in("M");
  rep.deg_q = op.degree_in("q");
  rep.ok = rep.term_count == e.expected_term_count;
  if (p >= 1) {
    rep.degrees_checked = true;
    const bool deg_ok = rep.deg_L == 2 * p - 1 && rep.deg_M == 8 * p - 4 &&
                        2 * rep.deg_q == 17 * p * (p - 1) + 4;
    rep.ok = rep.ok && deg_ok;
  }
  return rep;
}

}  // namespace qtrop
