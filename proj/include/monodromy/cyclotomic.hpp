#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

// Element of the cyclotomic field Q(zeta_k), zeta_k = exp(2*pi*i/k).
//
// Storage is the coefficient vector c[0..k-1] of sum c_j zeta_k^j, kept
// reduced modulo the k-th cyclotomic polynomial Phi_k, so c_j = 0 for
// j >= phi(k) and two elements of the same order are equal iff their
// vectors are equal.  Mixed-order arithmetic embeds both operands into
// Q(zeta_lcm) first.  All values are immutable after construction.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    explicit Cyclotomic(long n) : order_(1), coeffs_(1, Rational(n)) {}

    // sum of coeffs[j] * zeta_k^j; coeffs may have any length, exponents fold mod k.
    static Cyclotomic from_coeffs(int k, std::vector<Rational> coeffs);
    static Cyclotomic root_of_unity(int k, long power = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;           // true iff value lies in Q (all c_j = 0 for j >= 1)
    Rational rational_value() const;    // requires is_rational()

    // Image in Q(zeta_m); requires order() | m.
    Cyclotomic embedded(int m) const;

    Cyclotomic conj() const;            // zeta_k -> zeta_k^(k-1)
    Cyclotomic inverse() const;         // throws std::domain_error on zero
    Cyclotomic pow(long e) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Canonical text form at the stored order, e.g. "1/2 - z^2" with z = zeta_k.
    std::string to_string() const;

    // Stable key for canonical-form hashing at a FIXED order; callers must
    // normalize orders first (see Matrix::canonical_key).
    std::string canonical_key() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

// Coefficients of the k-th cyclotomic polynomial (monic, degree phi(k)),
// cached; safe for concurrent use.
std::shared_ptr<const std::vector<Rational>> cyclotomic_polynomial(int k);

int euler_phi(int k);

// Sign of a real cyclotomic number (one equal to its own conjugate):
// exact zero test on the canonical form, otherwise directed-rounding
// interval refinement until the interval excludes zero.
int sign_real_cyclotomic(const Cyclotomic& x);

} // namespace monodromy
