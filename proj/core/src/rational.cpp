#include "qtrop/rational.hpp"

namespace qtrop {

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace qtrop
