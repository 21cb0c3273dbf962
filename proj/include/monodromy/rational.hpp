#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace monodromy {

// Exact rationals are GMP's mpq_class: always canonical (lowest terms,
// positive denominator) once canonicalize() has run.  The helpers below
// guarantee canonical form on every construction path used in this project.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den", optionally signed.  Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& text);

// Canonical text form: "num" when den == 1, else "num/den".
std::string to_string(const Rational& x);

std::size_t hash_rational(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }

} // namespace monodromy
