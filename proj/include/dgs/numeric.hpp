#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dgs {

// Exact arithmetic only: every quantity in this library is an arbitrary
// precision integer or rational. Floating point is never used.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x mod m, normalized into [0, m). Requires m > 0.
inline Integer mod_floor(const Integer& x, const Integer& m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

// Modular inverse of a mod p for prime p and a not divisible by p.
inline Integer inv_mod_prime(const Integer& a, const Integer& p) {
    return boost::multiprecision::powm(mod_floor(a, p), p - 2, p);
}

}  // namespace dgs
