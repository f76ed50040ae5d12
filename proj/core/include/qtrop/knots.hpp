#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtrop/qholo.hpp"
#include "qtrop/tropical.hpp"

namespace qtrop {

struct KnotEntry {
  std::string name;
  WeylElement nonhomogeneous_op;
  Polynomial rhs{weyl_vars()};
  std::optional<WeylElement> homogeneous_op;
  std::vector<Polynomial> classical_factors;  // (M, L) alphabet
  std::vector<QPoly> initial_values;          // f_0, f_1, ...
  std::vector<RPoint> expected_vertices_nh;
  std::vector<RPoint> expected_vertices_hom;
  int expected_term_count = 0;
  int twist_p = 0;
};

// $QTROP_DATA_DIR if set, else the in-tree data directory.
std::string data_dir();

// names of the datasets found under data_dir()
std::vector<std::string> list_knots();

// name of a shipped knot, or a path to a directory in the same format
KnotEntry load(const std::string& name);

// recursion system of the shipped operator, rhs, and initial values
RecursionSystem knot_recursion(const KnotEntry& e);

// curve convention for operators acting on sequences: Definition-style
// min-plus tropicalization composed with the 180-degree rotation
TropicalPolynomial knot_tropical(const WeylElement& P);

struct AJReport {
  bool exact = false;
  bool up_to_monomial = false;  // equal after unit-monomial rescaling
};

// q -> 1 limit of the homogeneous operator against the stored factorization
AJReport verify_aj_41(const KnotEntry& e);

struct ShiftReport {
  bool found = false;
  long height = -1;        // lattice height of the vertical segment
  Point2 offset{0, 0};     // translation applied to the factor polygon
};

// N_{P,0} of the non-homogeneous operator as a Minkowski sum of the
// geometric factor's Newton polygon and a vertical segment.
ShiftReport verify_vertical_shift(const KnotEntry& e);

struct GoodnessRow {
  std::string name;
  std::string role;  // "nonhomogeneous" or "homogeneous"
  bool good = false;
};

std::vector<GoodnessRow> goodness_table(const std::vector<KnotEntry>& entries);

struct MetadataReport {
  bool ok = false;
  bool degrees_checked = false;  // only for twist parameter p >= 1
  int deg_L = 0, deg_M = 0, deg_q = 0;
  int term_count = 0;
};

MetadataReport metadata_check(const KnotEntry& e, int p);

}  // namespace qtrop
