#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace abelcone {

// Exact rational scalar used throughout; no floating point enters any
// certified value.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "<int>" or "<int>/<posint>".
Rat rat_parse(const std::string& text);

// Canonical form "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double rat_to_double(const Rat& r);

// Nearest rational with denominator <= max_den (continued fractions).
Rat rationalize(double x, unsigned long max_den);

}  // namespace abelcone
