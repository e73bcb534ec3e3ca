#pragma once

#include <gmpxx.h>

#include <string>

#include "nbv/errors.hpp"

namespace nbv {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on for
// structural equality and for map keys.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_int(long long v) { return Rat(static_cast<long>(v)); }

inline Rat rat_div(const Rat& a, const Rat& b, const std::string& what) {
  if (sgn(b) == 0) throw PoleError("pole: " + what);
  return a / b;
}

// Parses "p", "-p", "p/q" (whitespace-free decimal integers).
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& r);

Rat factorial(int k);

}  // namespace nbv
