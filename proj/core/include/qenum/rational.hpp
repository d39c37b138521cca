#pragma once

#include <gmpxx.h>

#include <string>

namespace qenum {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (GMP canonical form).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a" or "a/b" with optional leading '-'.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);

Rational rational_pow(const Rational& base, unsigned long exp);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace qenum
