#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinid {

/// Exact rational scalar. mpq_class keeps the canonical form the algebra
/// relies on: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Best rational approximation of x with denominator <= max_den, by
/// continued-fraction convergents. Used to feed doubles into the exact solver.
Rational rationalize(double x, unsigned long max_den = 1000000UL);

}  // namespace spinid
