#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulercat {

// GMP keeps every mpq_class result in lowest terms with a positive
// denominator, so the alias already carries the required invariants. Values
// built from a (num, den) pair must go through make_rational.
//
// Beware of `auto` with mpq_class expressions: they are expression templates
// that may refer to temporaries. Always name the type.
using Rational = mpq_class;

Rational make_rational(long num, long den);

/// Parses "p", "-p" or "p/q" (q != 0). The result is reduced.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace eulercat
