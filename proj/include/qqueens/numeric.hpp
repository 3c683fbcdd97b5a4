#pragma once

// Exact integers and rationals.  Every count and coefficient in the library
// is one of these; nothing is ever rounded.

#include <gmpxx.h>

#include <string>

namespace qq {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: den > 0, gcd(num,den) = 1

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q".  Throws InvalidArgument on anything else.
Rational parse_rational(const std::string& s);
BigInt parse_bigint(const std::string& s);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace qq
