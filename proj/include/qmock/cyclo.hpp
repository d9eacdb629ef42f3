#ifndef QMOCK_CYCLO_HPP
#define QMOCK_CYCLO_HPP

#include <string>
#include <vector>

#include "qmock/bigcomplex.hpp"
#include "qmock/errors.hpp"
#include "qmock/rational.hpp"

namespace qmock {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_poly(long long n);

// Element of Q(zeta_n): a polynomial in zeta of degree < phi(n),
// reduced modulo Phi_n.  Phi_n is irreducible, so this is a field.
class CyclotomicNumber {
public:
    CyclotomicNumber() : n_(1), c_(1, Rational(0)) {}
    CyclotomicNumber(const Rational& r, long long n);
    static CyclotomicNumber zeta_power(long long j, long long n);

    long long order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }
    std::string str() const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber inverse() const;  // throws DivisionByZero on 0
    CyclotomicNumber operator/(const CyclotomicNumber& o) const;
    CyclotomicNumber power(long long k) const;
    bool operator==(const CyclotomicNumber& o) const;

private:
    long long n_;
    std::vector<Rational> c_;  // size phi(n), reduced mod Phi_n

    void require_same_order(const CyclotomicNumber& o) const;
};

// prod_{i=0}^{count-1} (1 - sign * zeta^{arg_power + i*step_power}) in Q(zeta_n);
// sign = -1 gives the (-zeta^a; zeta^s)_count convention.
CyclotomicNumber poch_at_root(long long arg_power, long long step_power, long long count,
                              long long n, int sign = +1);

enum class RadialTheorem { FOR, W3, EX1, EX2, EX3, EX4, B2, PSI10 };

RadialTheorem radial_theorem_from_name(const std::string& name);
const char* radial_theorem_name(RadialTheorem t);

// Order of the root of unity each theorem attaches to (FOR: 2k, W3: 2k+1, ...).
// Throws InadmissibleOrder when (k, ell) violates the theorem's hypothesis.
long long radial_root_order(RadialTheorem t, long long k, long long ell = 0);

enum class F3Variant { paper, corrected };

// The exact finite sum on the right-hand side of the theorem, in Q(zeta_N).
// ell only matters for PSI10; f3 only for PSI10 with ell = 3.
CyclotomicNumber rhs_finite_sum(RadialTheorem t, long long k, long long ell = 0,
                                F3Variant f3 = F3Variant::corrected);

// Value of the representing polynomial at exp(2*pi*i*root_index/n).
BigComplex embed_numeric(const CyclotomicNumber& a, long long root_index,
                         unsigned precision_bits);

}  // namespace qmock

#endif
