#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace singlab {

/// Exact rational scalar. All polynomial and spectral algebra in the
/// project runs on these; doubles appear only at evaluation boundaries.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// q^n for integer n (n may be negative; q must be nonzero then).
inline Rational rat_pow(const Rational& q, long n) {
    if (n == 0) return Rational(1);
    Rational base = n > 0 ? q : Rational(1) / q;
    unsigned long e = n > 0 ? n : -n;
    Rational out(1);
    Rational acc = base;
    while (e) {
        if (e & 1) out *= acc;
        acc *= acc;
        e >>= 1;
    }
    return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace singlab
