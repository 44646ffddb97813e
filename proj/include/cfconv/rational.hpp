#pragma once

#include <gmpxx.h>

#include <string>

namespace cfconv {

// Exact arbitrary-precision scalars. Canonicalized mpq_class keeps every
// coefficient in lowest terms, which the algebra below relies on.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" with an optional leading sign.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& value);

}  // namespace cfconv
