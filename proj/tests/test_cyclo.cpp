#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmock/cyclo.hpp"

using namespace qmock;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<Integer>{1, -1, 1});

    // the defining factorization: prod_{d|n} Phi_d = x^n - 1
    for (long long n = 1; n <= 60; ++n) {
        std::vector<Integer> prod{1};
        for (long long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            std::vector<Integer> pd = cyclotomic_poly(d);
            std::vector<Integer> next(prod.size() + pd.size() - 1, Integer(0));
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < pd.size(); ++j) next[i + j] += prod[i] * pd[j];
            prod = std::move(next);
        }
        CAPTURE(n);
        REQUIRE(prod.size() == static_cast<size_t>(n) + 1);
        CHECK(prod.front() == -1);
        CHECK(prod.back() == 1);
        for (size_t i = 1; i < prod.size() - 1; ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("field arithmetic in Q(zeta_n)") {
    // zeta has exact multiplicative order n
    CHECK(CyclotomicNumber::zeta_power(12, 12) == CyclotomicNumber(Rational(1), 12));
    for (long long j = 1; j < 12; ++j)
        CHECK(!(CyclotomicNumber::zeta_power(j, 12) == CyclotomicNumber(Rational(1), 12)));

    // a * a^{-1} = 1
    CyclotomicNumber a =
        CyclotomicNumber(Rational(1), 5) + CyclotomicNumber::zeta_power(1, 5);
    CHECK(a * a.inverse() == CyclotomicNumber(Rational(1), 5));

    // full geometric orbit sums to zero for prime order
    CyclotomicNumber s(Rational(0), 7);
    for (long long j = 0; j < 7; ++j) s = s + CyclotomicNumber::zeta_power(j, 7);
    CHECK(s.is_zero());

    CHECK_THROWS_AS(CyclotomicNumber(Rational(0), 9).inverse(), DivisionByZero);
}

TEST_CASE("randomized field inverses, n <= 30") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long long> ord(2, 30), num(-5, 5), den(1, 4);
    int done = 0;
    while (done < 100) {
        long long n = ord(rng);
        CyclotomicNumber a(Rational(0), n);
        for (size_t i = 0; i < a.coeffs().size(); ++i)
            a = a + CyclotomicNumber(Rational(num(rng), den(rng)), n) *
                        CyclotomicNumber::zeta_power(static_cast<long long>(i), n);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == CyclotomicNumber(Rational(1), n));
        ++done;
    }
}

TEST_CASE("terminated pochhammers at roots of unity") {
    // (z;z^2)_1 at zeta = -1: 1 - (-1) = 2
    CHECK(poch_at_root(1, 2, 1, 2, +1) == CyclotomicNumber(Rational(2), 2));
    // (-z;z)_3 at n=3: (1+z)(1+z^2)(1+z^3) = 2
    CHECK(poch_at_root(1, 1, 3, 3, -1) == CyclotomicNumber(Rational(2), 3));
    // empty product
    CHECK(poch_at_root(1, 1, 0, 5, -1) == CyclotomicNumber(Rational(1), 5));
}

TEST_CASE("finite radial sums: derived spot values") {
    CHECK(rhs_finite_sum(RadialTheorem::FOR, 1) == CyclotomicNumber(Rational(4), 2));
    CHECK(rhs_finite_sum(RadialTheorem::W3, 0) == CyclotomicNumber(Rational(-1), 1));
    CHECK(rhs_finite_sum(RadialTheorem::EX1, 1) == CyclotomicNumber(Rational(1), 2));
    CHECK(rhs_finite_sum(RadialTheorem::B2, 0) == CyclotomicNumber(Rational(-1, 2), 1));
    CHECK(rhs_finite_sum(RadialTheorem::EX2, 0) == CyclotomicNumber(Rational(-1), 1));

    // admissibility guards
    CHECK_THROWS_AS(radial_root_order(RadialTheorem::FOR, 0), InadmissibleOrder);
    CHECK_THROWS_AS(radial_root_order(RadialTheorem::EX1, 2), InadmissibleOrder);
    CHECK_THROWS_AS(radial_root_order(RadialTheorem::PSI10, 1, 2), InadmissibleOrder);
    CHECK(radial_root_order(RadialTheorem::PSI10, 1, 3) == 13);

    // every acceptance parameter evaluates without division blowups
    CHECK(!rhs_finite_sum(RadialTheorem::FOR, 2).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::W3, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX1, 3).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX2, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX3, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX3, 2).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX4, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::EX4, 2).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::B2, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::PSI10, 0, 1).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::PSI10, 0, 3).is_zero());
    CHECK(!rhs_finite_sum(RadialTheorem::PSI10, 0, 3, F3Variant::paper).is_zero());
}

TEST_CASE("numeric embedding") {
    const unsigned bits = 128;
    BigFloat tol = pow(BigFloat(2), -120);

    BigComplex i4 = embed_numeric(CyclotomicNumber::zeta_power(1, 4), 1, bits);
    CHECK(abs(i4.re) < tol);
    CHECK(abs(i4.im - 1) < tol);

    CyclotomicNumber s(Rational(0), 7);
    for (long long j = 0; j < 7; ++j) s = s + CyclotomicNumber::zeta_power(j, 7);
    CHECK(embed_numeric(s, 1, bits).abs() < tol);

    // multiplicativity
    CyclotomicNumber a =
        CyclotomicNumber(Rational(2, 3), 12) + CyclotomicNumber::zeta_power(5, 12);
    CyclotomicNumber b =
        CyclotomicNumber(Rational(-1, 2), 12) + CyclotomicNumber::zeta_power(7, 12);
    BigComplex lhs = embed_numeric(a * b, 5, bits);
    BigComplex rhs = embed_numeric(a, 5, bits) * embed_numeric(b, 5, bits);
    CHECK((lhs - rhs).abs() < tol);

    // conjugate embeddings give conjugate values
    for (RadialTheorem t : {RadialTheorem::FOR, RadialTheorem::W3, RadialTheorem::EX2}) {
        long long k = (t == RadialTheorem::FOR) ? 1 : 1;
        CyclotomicNumber v = rhs_finite_sum(t, k);
        long long N = v.order();
        long long idx = 1;
        BigComplex z1 = embed_numeric(v, idx, bits);
        BigComplex z2 = embed_numeric(v, N - idx == 0 ? idx : N - idx, bits);
        CHECK((z1.conj() - z2).abs() < tol * 16);
    }
}
