#pragma once

#include <gmpxx.h>

#include <string>

namespace sos {

// Exact rational coefficient type. All cone-membership decisions are made
// with these; no floating point enters until a value is handed to the
// numeric oracle or a sampler.
using Rational = mpq_class;

// Parses "p" or "p/q" (decimal digits, optional leading sign on p).
// Throws std::invalid_argument on malformed input or q == 0.
Rational rational_from_string(const std::string& text);

// Lowest-terms rendering: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

}  // namespace sos
