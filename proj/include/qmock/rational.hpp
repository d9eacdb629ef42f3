#ifndef QMOCK_RATIONAL_HPP
#define QMOCK_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

namespace qmock {

// Exact arbitrary-size rational; GMP keeps it in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// c^k for any integer k (c != 0 when k < 0).
inline Rational rational_pow(const Rational& c, long long k) {
    if (k == 0) return Rational(1);
    Rational base = k > 0 ? c : Rational(1) / c;
    unsigned long long e = k > 0 ? static_cast<unsigned long long>(k)
                                 : static_cast<unsigned long long>(-(k + 1)) + 1ull;
    Rational acc(1);
    while (e) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace qmock

#endif
