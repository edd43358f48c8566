#pragma once

#include <gmpxx.h>

#include <string>

namespace cfree {

/// Exact rational scalar used for every coefficient, moment and map
/// parameter. Doubles appear only in eigenvalue-based checks.
using Rat = mpq_class;

/// Parses "p" or "p/q" (arbitrary precision, q != 0) into lowest terms.
Rat rat_from_string(const std::string& text);

/// Serializes as "p/q" in lowest terms; the denominator is always written.
std::string rat_to_string(const Rat& value);

/// value^exponent for exponent >= 0, with 0^0 = 1.
Rat rat_pow(const Rat& value, int exponent);

inline double rat_to_double(const Rat& value) { return value.get_d(); }

}  // namespace cfree
