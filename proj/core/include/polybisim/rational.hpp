#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polybisim {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "12", "-0.0625", "1.5e-3" or "7/3" digit-exactly.
/// Throws Error{kMalformed} on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace polybisim
