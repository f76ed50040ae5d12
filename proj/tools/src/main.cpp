#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "document.hpp"
#include "qtrop/knots.hpp"
#include "qtrop/qholo.hpp"
#include "svg.hpp"

namespace qtrop::cli {
namespace {

using nlohmann::json;

struct InputFlags {
  std::string knot, poly, file;
  bool homogeneous = false;
  bool json_out = false;
  std::string out;
};

void add_input_flags(CLI::App* cmd, InputFlags& in, bool with_role = true) {
  auto* k = cmd->add_option("--knot", in.knot, "shipped dataset name");
  auto* p = cmd->add_option("--poly", in.poly,
                            "polynomial expression in M, L, q");
  auto* f = cmd->add_option("--file", in.file, "path to an operator file");
  k->excludes(p)->excludes(f);
  p->excludes(f);
  if (with_role) {
    auto* nh = cmd->add_flag_function(
        "--nonhomogeneous", [&in](std::int64_t) { in.homogeneous = false; },
        "use the non-homogeneous operator (default)");
    cmd->add_flag("--homogeneous", in.homogeneous,
                  "use the homogeneous operator")
        ->excludes(nh);
  }
  cmd->add_flag("--json", in.json_out, "emit JSON instead of plain text");
  cmd->add_option("--out", in.out, "write output to a file");
}

struct ResolvedInput {
  WeylElement op;
  std::string source;
  bool knot_convention = false;  // tropicalize through the 180-degree turn
  std::optional<KnotEntry> entry;
};

WeylElement operator_from_file(const std::string& path) {
  std::ifstream fin(path);
  if (!fin) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> vars = weyl_vars();
  std::string body, line;
  while (std::getline(fin, line)) {
    if (line.rfind("knot: ", 0) == 0 || line.rfind("role: ", 0) == 0)
      continue;
    if (line.rfind("vars: ", 0) == 0) {
      vars.clear();
      std::istringstream vs(line.substr(6));
      std::string v;
      while (vs >> v) vars.push_back(v);
      continue;
    }
    if (!line.empty() && line[0] == '#') continue;
    body += line;
    body += ' ';
  }
  Polynomial raw = parse_poly(body, vars);
  std::map<std::string, Polynomial> into;
  for (const auto& v : vars)
    into.emplace(v, Polynomial::variable(weyl_vars(), v));
  return WeylElement(raw.substitute(into));
}

ResolvedInput resolve(const InputFlags& in) {
  ResolvedInput r;
  if (!in.knot.empty()) {
    r.entry = load(in.knot);
    if (in.homogeneous) {
      if (!r.entry->homogeneous_op)
        throw std::runtime_error("no homogeneous operator shipped for " +
                                 in.knot);
      r.op = *r.entry->homogeneous_op;
    } else {
      r.op = r.entry->nonhomogeneous_op;
    }
    r.source = "knot:" + in.knot + ":" +
               (in.homogeneous ? "homogeneous" : "nonhomogeneous");
    r.knot_convention = true;
  } else if (!in.poly.empty()) {
    r.op = WeylElement(parse_poly(in.poly, weyl_vars()));
    r.source = "poly:" + in.poly;
  } else if (!in.file.empty()) {
    r.op = operator_from_file(in.file);
    r.source = "file:" + in.file;
    r.knot_convention = true;  // operator files hold sequence operators
  } else {
    throw std::runtime_error("one of --knot, --poly, --file is required");
  }
  if (r.op.is_zero()) throw std::domain_error("zero operator");
  return r;
}

TropicalPolynomial tropical_of(const ResolvedInput& r) {
  return r.knot_convention ? knot_tropical(r.op) : tropicalize(r.op);
}

void emit(const InputFlags& in, const std::string& text) {
  if (in.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(in.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + in.out);
  f << text;
}

std::string set_string(const SlopeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s.finite) {
    if (!first) out += ", ";
    out += to_string(v);
    first = false;
  }
  if (s.vertical) {
    if (!first) out += ", ";
    out += "1/0";
  }
  return out + "}";
}

json slope_set_json(const SlopeSet& s) {
  json arr = json::array();
  for (const auto& v : s.finite) arr.push_back(to_string(v));
  if (s.vertical) arr.push_back("1/0");
  return arr;
}

json polygon_json(const LatticePolygon& p) {
  json arr = json::array();
  for (const auto& v : p.vertices) arr.push_back(json::array({v.x, v.y}));
  return arr;
}

std::string polygon_string(const LatticePolygon& p) {
  std::string out;
  for (const auto& v : p.vertices) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
  }
  return out;
}

// ---- recursion files --------------------------------------------------
//   operator: <expression in M, L, q>
//   rhs: <expression in M, q>            (optional; default homogeneous)
//   initial: <expression in q>           (one line per initial value)
RecursionSystem recursion_from_file(const std::string& path,
                                    WeylElement* op_out) {
  std::ifstream fin(path);
  if (!fin) throw std::runtime_error("cannot open " + path);
  std::string line;
  WeylElement op;
  Polynomial rhs(weyl_vars());
  std::vector<RationalFunction> init;
  while (std::getline(fin, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("operator: ", 0) == 0)
      op = WeylElement(parse_poly(line.substr(10), weyl_vars()));
    else if (line.rfind("rhs: ", 0) == 0)
      rhs = parse_poly(line.substr(5), weyl_vars());
    else if (line.rfind("initial: ", 0) == 0)
      init.push_back(RationalFunction::from_qpoly(
          QPoly::from_poly(parse_poly(line.substr(9), {"q"}))));
    else
      throw std::runtime_error("unrecognized line in " + path + ": " + line);
  }
  if (op_out) *op_out = op;
  return make_recursion(op, rhs, std::move(init));
}

struct RecursionInput {
  RecursionSystem rec;
  WeylElement op;         // the recursion operator as given
  Polynomial rhs{weyl_vars()};
  std::string source;
};

RecursionInput resolve_recursion(const std::string& knot,
                                 const std::string& recfile) {
  RecursionInput r;
  if (!knot.empty()) {
    const KnotEntry e = load(knot);
    r.rec = knot_recursion(e);
    r.op = e.nonhomogeneous_op;
    r.rhs = e.rhs;
    r.source = "knot:" + knot;
  } else if (!recfile.empty()) {
    r.rec = recursion_from_file(recfile, &r.op);
    r.rhs = r.rec.b;
    r.source = "file:" + recfile;
  } else {
    throw std::runtime_error("one of --knot, --recursion is required");
  }
  return r;
}

// ---- subcommand bodies -------------------------------------------------

void cmd_curve(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const CurveDocument doc =
      make_document(curve(tropical_of(r)), r.op, r.source);
  emit(in, to_json(doc).dump(2) + "\n");
}

void cmd_subdivision(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const RegularSubdivision sub = lower_subdivision(lift_config(tropical_of(r)));
  const auto seg_str = [](const Segment& s) {
    return "(" + std::to_string(s.a.x) + "," + std::to_string(s.a.y) + ")-(" +
           std::to_string(s.b.x) + "," + std::to_string(s.b.y) + ")";
  };
  if (in.json_out) {
    json j;
    j["source"] = r.source;
    j["dim"] = sub.dim;
    j["cells"] = json::array();
    for (const auto& c : sub.cells) {
      json cell;
      cell["hull"] = json::array();
      for (const auto& p : c.hull) cell["hull"].push_back({p.x, p.y});
      cell["marked"] = json::array();
      for (const auto& p : c.marked) cell["marked"].push_back({p.x, p.y});
      cell["plane"] = {to_string(c.alpha), to_string(c.beta),
                       to_string(c.gamma)};
      j["cells"].push_back(std::move(cell));
    }
    j["interior_edges"] = json::array();
    for (const auto& s : sub.interior_edges)
      j["interior_edges"].push_back(seg_str(s));
    j["boundary_edges"] = json::array();
    for (const auto& s : sub.boundary_edges)
      j["boundary_edges"].push_back(seg_str(s));
    j["outline"] = polygon_json(sub.outline);
    emit(in, j.dump(2) + "\n");
    return;
  }
  std::ostringstream out;
  out << "source: " << r.source << "\ndim: " << sub.dim << "\n";
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    const auto& c = sub.cells[i];
    out << "cell " << i << ": hull";
    for (const auto& p : c.hull) out << " (" << p.x << "," << p.y << ")";
    out << "; plane h = " << to_string(c.alpha) << "*x + "
        << to_string(c.beta) << "*y + " << to_string(c.gamma) << "\n";
  }
  out << "interior edges:";
  for (const auto& s : sub.interior_edges) out << ' ' << seg_str(s);
  out << "\nboundary edges:";
  for (const auto& s : sub.boundary_edges) out << ' ' << seg_str(s);
  if (sub.dim == 1) {
    out << "\nchain:";
    for (const auto& s : sub.chain) out << ' ' << seg_str(s);
  }
  out << "\n";
  emit(in, out.str());
}

void cmd_polygon(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const LatticePolygon n0 = project_to_LM(support_3d(r.op));
  const LatticePolygon n1 = polygon_at_q1(r.op);
  const bool good = is_good(r.op);
  if (in.json_out) {
    json j = {{"source", r.source},
              {"polygon", polygon_json(n0)},
              {"polygon_q1", polygon_json(n1)},
              {"good", good}};
    emit(in, j.dump(2) + "\n");
    return;
  }
  std::ostringstream out;
  out << "source: " << r.source << "\nN0: " << polygon_string(n0)
      << "\nN1: " << polygon_string(n1) << "\ngood: " << std::boolalpha
      << good << "\n";
  emit(in, out.str());
}

void cmd_slopes(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const auto es = edge_slopes(project_to_LM(support_3d(r.op)));
  SlopeSet plain;
  for (const auto& s : es) {
    if (s.den == 0)
      plain.vertical = true;
    else
      plain.finite.insert(Rational(s.num) / Rational(s.den));
  }
  const SlopeSet neg = negated(es);
  if (in.json_out) {
    json j = {{"source", r.source},
              {"slopes", slope_set_json(plain)},
              {"negated", slope_set_json(neg)}};
    emit(in, j.dump(2) + "\n");
    return;
  }
  emit(in, "slopes: " + set_string(plain) + "\nnegated: " + set_string(neg) +
               "\n");
}

void cmd_degrees(const std::string& knot, const std::string& recfile, long N,
                 int max_period, const InputFlags& in) {
  const RecursionInput r = resolve_recursion(knot, recfile);
  const auto f = evaluate(r.rec, N);
  std::size_t start = 0;
  while (start < f.size() && f[start].is_zero()) ++start;
  std::vector<Rational> deltas(start, Rational(0));
  for (std::size_t i = start; i < f.size(); ++i) {
    if (f[i].is_zero())
      throw std::domain_error("zero sequence value: degree undefined");
    deltas.push_back(Rational(f[i].deg()));
  }
  const QuasiPolynomial qp =
      fit_quasipolynomial(deltas, max_period, static_cast<long>(start));
  if (in.json_out) {
    json j;
    j["source"] = r.source;
    j["values"] = json::array();
    for (std::size_t n = 0; n < f.size(); ++n) {
      json row = {{"n", n}};
      if (f[n].is_zero()) {
        row["zero"] = true;
      } else {
        row["deg_q"] = f[n].deg();
        row["min_deg_q"] = f[n].min_deg();
      }
      j["values"].push_back(std::move(row));
    }
    j["fit"] = {{"period", qp.period}, {"onset", qp.onset}};
    j["fit"]["coeffs"] = json::array();
    for (const auto& g : qp.coeffs)
      j["fit"]["coeffs"].push_back(
          {to_string(g[0]), to_string(g[1]), to_string(g[2])});
    j["slopes"] = slope_set_json(slopes(qp));
    emit(in, j.dump(2) + "\n");
    return;
  }
  std::ostringstream out;
  out << "source: " << r.source << "\n n  deg_q  min_deg_q\n";
  for (std::size_t n = 0; n < f.size(); ++n) {
    out << ' ' << n;
    if (f[n].is_zero())
      out << "  -  -\n";
    else
      out << "  " << f[n].deg() << "  " << f[n].min_deg() << "\n";
  }
  out << "fit: period " << qp.period << ", onset " << qp.onset << "\n";
  for (int rr = 0; rr < qp.period; ++rr) {
    const auto& g = qp.coeffs[rr];
    out << "  n = " << rr << " mod " << qp.period << ": "
        << to_string(g[0]) << "*C(n,2) + " << to_string(g[1]) << "*n + "
        << to_string(g[2]) << "\n";
  }
  out << "slopes: " << set_string(slopes(qp)) << "\n";
  emit(in, out.str());
}

void cmd_check_aj(const InputFlags& in) {
  if (in.knot.empty()) throw std::runtime_error("check aj needs --knot");
  const AJReport rep = verify_aj_41(load(in.knot));
  if (in.json_out) {
    emit(in, json{{"exact", rep.exact},
                  {"up_to_monomial", rep.up_to_monomial}}
                     .dump(2) +
                 "\n");
    return;
  }
  std::ostringstream out;
  out << std::boolalpha << "exact: " << rep.exact << "\n";
  if (!rep.exact) out << "up_to_monomial: " << rep.up_to_monomial << "\n";
  emit(in, out.str());
  if (!rep.exact && !rep.up_to_monomial) std::exit(2);
}

void cmd_check_balance(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const TropicalCurve c = curve(tropical_of(r));
  const BalanceReport rep = balancing_check(c);
  if (in.json_out) {
    json defects = json::array();
    for (const auto& [dx, dy] : rep.defects)
      defects.push_back(json::array({dx, dy}));
    emit(in, json{{"balanced", rep.balanced}, {"defects", defects}}.dump(2) +
                 "\n");
  } else {
    std::ostringstream out;
    out << std::boolalpha << "balanced: " << rep.balanced << "\n";
    if (!rep.balanced)
      for (std::size_t i = 0; i < rep.defects.size(); ++i)
        if (rep.defects[i] != std::pair<long, long>{0, 0})
          out << "vertex " << i << ": defect (" << rep.defects[i].first
              << "," << rep.defects[i].second << ")\n";
    emit(in, out.str());
  }
  if (!rep.balanced) std::exit(2);
}

void cmd_check_good(const InputFlags& in) {
  const ResolvedInput r = resolve(in);
  const bool good = is_good(r.op);
  if (in.json_out)
    emit(in, json{{"good", good}}.dump(2) + "\n");
  else {
    std::ostringstream out;
    out << std::boolalpha << "good: " << good << "\n";
    emit(in, out.str());
  }
}

void cmd_check_shift(const InputFlags& in) {
  if (in.knot.empty()) throw std::runtime_error("check shift needs --knot");
  const ShiftReport rep = verify_vertical_shift(load(in.knot));
  if (in.json_out) {
    emit(in, json{{"found", rep.found}, {"height", rep.height}}.dump(2) +
                 "\n");
  } else {
    std::ostringstream out;
    out << std::boolalpha << "found: " << rep.found << "\n";
    if (rep.found) out << "height: " << rep.height << "\n";
    emit(in, out.str());
  }
  if (!rep.found) std::exit(2);
}

void cmd_check_prop1(const std::string& knot, const std::string& recfile,
                     long N, int max_period, const InputFlags& in) {
  const RecursionInput r = resolve_recursion(knot, recfile);
  const WeylElement hom =
      r.rhs.is_zero() ? r.op : homogenize(r.op, r.rhs);
  const Prop1Report rep = check_prop1(hom, r.rec, N, max_period);
  if (in.json_out) {
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back({{"slope", to_string(e.slope)},
                         {"matched", e.matched}});
    emit(in, json{{"source", r.source},
                  {"contained", rep.contained},
                  {"sequence_slopes", slope_set_json(rep.sequence_slopes)},
                  {"polygon_slopes", slope_set_json(rep.polygon_slopes)},
                  {"period", rep.fit.period},
                  {"entries", entries}}
                     .dump(2) +
                 "\n");
  } else {
    std::ostringstream out;
    out << "source: " << r.source << "\nsequence slopes: "
        << set_string(rep.sequence_slopes)
        << "\npolygon slopes (negated): " << set_string(rep.polygon_slopes)
        << "\n";
    for (const auto& e : rep.entries)
      out << "  " << to_string(e.slope)
          << (e.matched ? " matched\n" : " MISSING\n");
    out << std::boolalpha << "contained: " << rep.contained << "\n";
    emit(in, out.str());
  }
  if (!rep.contained) std::exit(2);
}

void cmd_svg(const InputFlags& in, const std::string& window_spec,
             long scale) {
  CurveDocument doc;
  if (!in.file.empty() && in.file.size() > 5 &&
      in.file.substr(in.file.size() - 5) == ".json") {
    std::ifstream f(in.file);
    if (!f) throw std::runtime_error("cannot open " + in.file);
    doc = document_from_json(json::parse(f));
  } else {
    const ResolvedInput r = resolve(in);
    doc = make_document(curve(tropical_of(r)), r.op, r.source);
  }
  std::array<Rational, 4> window;
  if (window_spec.empty()) {
    window = default_window(doc);
  } else {
    std::istringstream ws(window_spec);
    std::string tok;
    int i = 0;
    while (std::getline(ws, tok, ',') && i < 4)
      window[i++] = rational_from_string(tok);
    if (i != 4) throw std::invalid_argument("--window needs x0,y0,x1,y1");
  }
  emit(in, render_svg(doc, window, scale));
}

void cmd_dataset_list(const InputFlags& in) {
  std::ostringstream out;
  if (in.json_out) {
    out << json(list_knots()).dump(2) << "\n";
  } else {
    for (const auto& n : list_knots()) out << n << "\n";
  }
  emit(in, out.str());
}

void cmd_dataset_validate(const InputFlags& in) {
  const std::vector<std::string> names =
      in.knot.empty() ? list_knots() : std::vector<std::string>{in.knot};
  bool all_ok = true;
  std::ostringstream out;
  for (const auto& name : names) {
    try {
      const KnotEntry e = load(name);  // annihilation + term-count checks
      const MetadataReport meta = metadata_check(e, e.twist_p);
      bool ok = meta.ok;
      std::string why = ok ? "" : "metadata mismatch";
      const auto check_vertices = [&](const WeylElement& op,
                                      const std::vector<RPoint>& expected,
                                      const char* role) {
        if (expected.empty()) return;
        const TropicalCurve c = curve(knot_tropical(op));
        std::set<RPoint> got(c.vertices.begin(), c.vertices.end());
        if (got != std::set<RPoint>(expected.begin(), expected.end())) {
          ok = false;
          why = std::string(role) + " vertex list mismatch";
        }
      };
      check_vertices(e.nonhomogeneous_op, e.expected_vertices_nh,
                     "nonhomogeneous");
      if (e.homogeneous_op)
        check_vertices(*e.homogeneous_op, e.expected_vertices_hom,
                       "homogeneous");
      out << name << ": " << (ok ? "ok" : "FAIL (" + why + ")") << "\n";
      all_ok = all_ok && ok;
    } catch (const std::exception& ex) {
      out << name << ": FAIL (" << ex.what() << ")\n";
      all_ok = false;
    }
  }
  emit(in, out.str());
  if (!all_ok) std::exit(2);
}

int run(int argc, char** argv) {
  CLI::App app{"exact tropical curves of q-difference operators"};
  app.require_subcommand(1);

  InputFlags in;
  std::string recfile, window_spec;
  long N = 40, scale = 40;
  int max_period = 8;

  auto* c_curve = app.add_subcommand("curve", "tropical curve as JSON");
  add_input_flags(c_curve, in);
  c_curve->callback([&] { cmd_curve(in); });

  auto* c_sub = app.add_subcommand("subdivision",
                                   "regular subdivision of the support");
  add_input_flags(c_sub, in);
  c_sub->callback([&] { cmd_subdivision(in); });

  auto* c_poly = app.add_subcommand("polygon", "Newton polygons and goodness");
  add_input_flags(c_poly, in);
  c_poly->callback([&] { cmd_polygon(in); });

  auto* c_slopes = app.add_subcommand("slopes", "edge slopes of the polygon");
  add_input_flags(c_slopes, in);
  c_slopes->callback([&] { cmd_slopes(in); });

  auto* c_deg = app.add_subcommand("degrees",
                                   "sequence degrees and quasi-polynomial fit");
  add_input_flags(c_deg, in, /*with_role=*/false);
  c_deg->add_option("--recursion", recfile, "recursion description file");
  c_deg->add_option("--N", N, "number of sequence terms");
  c_deg->add_option("--max-period", max_period, "fit period bound");
  c_deg->callback([&] { cmd_degrees(in.knot, recfile, N, max_period, in); });

  auto* c_check = app.add_subcommand("check", "verification reports");
  c_check->require_subcommand(1);
  auto* c_aj = c_check->add_subcommand("aj", "classical-limit factorization");
  add_input_flags(c_aj, in, false);
  c_aj->callback([&] { cmd_check_aj(in); });
  auto* c_bal = c_check->add_subcommand("balance", "balancing at vertices");
  add_input_flags(c_bal, in);
  c_bal->callback([&] { cmd_check_balance(in); });
  auto* c_good = c_check->add_subcommand("good", "N1 == N0");
  add_input_flags(c_good, in);
  c_good->callback([&] { cmd_check_good(in); });
  auto* c_prop1 = c_check->add_subcommand(
      "prop1", "degree slopes versus negated polygon slopes");
  add_input_flags(c_prop1, in, false);
  c_prop1->add_option("--recursion", recfile, "recursion description file");
  c_prop1->add_option("--N", N, "number of sequence terms");
  c_prop1->add_option("--max-period", max_period, "fit period bound");
  c_prop1->callback(
      [&] { cmd_check_prop1(in.knot, recfile, N, max_period, in); });
  auto* c_shift = c_check->add_subcommand(
      "shift", "polygon as factor polygon plus vertical segment");
  add_input_flags(c_shift, in, false);
  c_shift->callback([&] { cmd_check_shift(in); });

  auto* c_svg = app.add_subcommand("svg", "render the curve as SVG");
  add_input_flags(c_svg, in);
  c_svg->add_option("--window", window_spec, "x0,y0,x1,y1 (rationals)");
  c_svg->add_option("--scale", scale, "pixels per lattice unit");
  c_svg->callback([&] { cmd_svg(in, window_spec, scale); });

  auto* c_ds = app.add_subcommand("dataset", "shipped dataset operations");
  c_ds->require_subcommand(1);
  auto* c_list = c_ds->add_subcommand("list", "list shipped datasets");
  add_input_flags(c_list, in, false);
  c_list->callback([&] { cmd_dataset_list(in); });
  auto* c_val = c_ds->add_subcommand("validate", "full dataset validation");
  add_input_flags(c_val, in, false);
  c_val->callback([&] { cmd_dataset_validate(in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qtrop::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const EvaluateError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const FitError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace qtrop::cli

int main(int argc, char** argv) { return qtrop::cli::run(argc, argv); }
