#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fano {

/// Arbitrary precision integer. All lattice data is exact; no floating point
/// is used anywhere in the library.
using Int = mpz_class;

/// Arbitrary precision rational, always kept in lowest terms by GMP.
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Extended gcd: returns g = gcd(a, b) and fills x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Floor division, exact for negative operands as well.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// a mod b normalized into [0, |b|).
inline Int pos_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

/// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

/// Multiplicative inverse of a modulo m > 1; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::invalid_argument("mod_inverse: argument is not a unit modulo " + m.get_str());
    }
    return inv;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) {
        throw std::overflow_error("to_long: value out of range: " + a.get_str());
    }
    return a.get_si();
}

}  // namespace fano
