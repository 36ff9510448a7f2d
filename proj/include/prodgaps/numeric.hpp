#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prodgaps {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals (GMP). No floating point appears in any comparison.
using Integer = mpz_class;
using Rational = mpq_class;

// ceil(q) for a rational q.
inline Integer ceil_rational(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// floor(q) for a rational q.
inline Integer floor_rational(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num/den" or a plain integer. Decimal notation is rejected: exact
// rationals only.
Rational parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rational_str(const Rational& q);

}  // namespace prodgaps
