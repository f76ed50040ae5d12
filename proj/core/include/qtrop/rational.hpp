#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtrop {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonicalized, denominator > 0

// Parses "p", "-p/q" etc. Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& r);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace qtrop
