#pragma once

#include <gmpxx.h>
#include <string>

namespace pmv {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: fully reduced, denominator > 0.
using Rat = mpq_class;

// Parses "7", "-3/4", "0". Throws std::invalid_argument on anything else
// (including "3/0"). Result is canonicalized.
Rat rat_parse(const std::string& s);

// Inverse of rat_parse: "p/q", or just "p" when q == 1.
std::string rat_str(const Rat& q);

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace pmv
