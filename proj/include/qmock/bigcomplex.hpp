#ifndef QMOCK_BIGCOMPLEX_HPP
#define QMOCK_BIGCOMPLEX_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "qmock/rational.hpp"

namespace qmock {

// Arbitrary-precision real; precision is set per variable at runtime.
using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits(unsigned bits) {
    // digits10 >= bits * log10(2), rounded up with slack
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Minimal complex value over BigFloat.  std::complex is only specified for
// the builtin floating types, so the few operations needed are spelled out.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const Rational& r, unsigned digits = 0) : re(0), im(0) {
        if (digits) {
            re.precision(digits);
            im.precision(digits);
        }
        re = BigFloat(numerator(r)) / BigFloat(denominator(r));
    }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    BigComplex conj() const { return {re, -im}; }
    BigFloat abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

inline BigComplex operator*(const BigFloat& s, const BigComplex& z) {
    return {s * z.re, s * z.im};
}

}  // namespace qmock

#endif
