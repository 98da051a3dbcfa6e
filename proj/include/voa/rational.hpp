#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "voa/errors.hpp"

namespace voa {

// Arbitrary-precision integers and rationals. mpq_class is kept canonical
// (gcd 1, positive denominator) by GMP itself, which is exactly the
// BigRational contract.
using BigInt   = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/* "7", "-3/4". A denominator of 1 is never printed. */
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view s)
{
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw ParseError("bad rational: '" + std::string(s) + "'");
    if (q.get_den() == 0)
        throw ZeroDenominatorError();
    q.canonicalize();
    return q;
}

/* C(m, j) for arbitrary integer m and j >= 0; always an integer. */
inline BigInt binomial(long m, long j)
{
    if (j < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 0; i < j; ++i) {
        num *= BigInt(m - i);
        den *= BigInt(i + 1);
    }
    return num / den; // exact
}

inline BigInt factorial(long j)
{
    BigInt r = 1;
    for (long i = 2; i <= j; ++i) r *= i;
    return r;
}

} // namespace voa
