#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperred {

using Int = mpz_class;
using Rat = mpq_class;

// Builds a canonical rational from an integer pair.
Rat make_rational(long num, long den);
Rat make_rational(const Int& num, const Int& den);

// Parses "num/den" or a plain integer string. Strict: optional leading '-'
// on the numerator, decimal digits only, positive denominator. Floating
// point literals are rejected. Throws ParseError.
Rat parse_rational(std::string_view text);

// Canonical "num/den" form, lowest terms, denominator always printed:
// "0/1", "-3/5", "7/1".
std::string format_rational(const Rat& v);

bool is_integer(const Rat& v);

// v as an Int; requires is_integer(v).
Int to_integer(const Rat& v);

// base^e for a nonnegative exponent.
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);

}  // namespace hyperred
