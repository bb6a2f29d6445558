#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace treecones {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating point anywhere on a value path.
using Rational = mpq_class;

// mpq_class(num, den) does not reduce; this does.
Rational make_rational(long num, long den = 1);

// Accepts "a" or "a/b" with optional sign; throws FormatError otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: "a" when the denominator is 1, else "a/b" in lowest terms.
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace treecones
