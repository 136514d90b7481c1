#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace csym {

// Exact rational coefficients. GMP keeps mpq_class canonicalized (reduced,
// positive denominator) as long as arithmetic goes through its operators.
using Rational = mpq_class;

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_text(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q" with optional leading '-'. Throws on malformed input.
Rational rational_from_string(const std::string& text);

}  // namespace csym
