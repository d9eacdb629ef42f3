#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/theta.hpp"

using namespace qmock;

TEST_CASE("sum and product forms agree") {
    for (long long M : {1ll, 2ll, 3ll, 5ll, 8ll}) {
        for (long long a = -2 * M; a <= 2 * M; ++a) {
            for (int sign : {+1, -1}) {
                ThetaSpec spec(Monomial(sign, 1, a), M);
                LaurentSeries p = jtheta_product(spec, 60);
                LaurentSeries s = jtheta_sum(spec, 60);
                CAPTURE(spec.str());
                CHECK(series_equal(p, s));
            }
        }
    }
}

TEST_CASE("lattice zeros") {
    CHECK(is_lattice_zero(ThetaSpec(Monomial::one(), 3)));
    CHECK(is_lattice_zero(ThetaSpec(Monomial::q_power(-6), 3)));
    CHECK(!is_lattice_zero(ThetaSpec(Monomial::q_power(2), 3)));
    CHECK(!is_lattice_zero(ThetaSpec(Monomial::neg_q_power(3), 3)));
    LaurentSeries z = jtheta_product(ThetaSpec(Monomial::q_power(3), 3), 40);
    CHECK(!z.valuation().has_value());
    CHECK(!jtheta_sum(ThetaSpec(Monomial::q_power(3), 3), 40).valuation().has_value());
}

TEST_CASE("quasi-periodicity and inversion") {
    // j(q^M x; q^M) = -x^{-1} j(x; q^M) and j(x^{-1} q^M; q^M) = j(x; q^M)
    for (long long M : {1ll, 2ll, 5ll}) {
        for (long long a : {1ll, 2ll, -1ll}) {
            for (int sign : {+1, -1}) {
                Monomial x(sign, 1, a);
                if (jtheta_vanishes(x, M)) continue;
                LaurentSeries base = jtheta_general(x, M, 50);
                LaurentSeries shifted = jtheta_general(x.times(Monomial::q_power(M)), M, 50);
                LaurentSeries expect = negate(mul(base, x.inverse()));
                CHECK(series_equal(truncated(shifted, 40), truncated(expect, 40)));

                LaurentSeries flipped =
                    jtheta_general(x.inverse().times(Monomial::q_power(M)), M, 50);
                CHECK(series_equal(truncated(flipped, 40), truncated(base, 40)));
            }
        }
    }
}

TEST_CASE("shorthand values") {
    // J_m = j(q^m; q^{3m}) = (q^m; q^m)_inf
    for (long long m : {1ll, 2ll, 4ll}) {
        LaurentSeries jm = theta_shorthand(ThetaKind::Jm, 0, m, 50);
        LaurentSeries euler = pochhammer_infinite(Monomial::q_power(m), m, 50);
        CHECK(series_equal(jm, euler));
    }
    // Jbar_{0,1} = j(-1;q) = 2 (q^2;q^2)_inf / ... check leading terms instead:
    LaurentSeries jb = theta_shorthand(ThetaKind::Jbar, 0, 1, 30);
    CHECK(jb.coefficient(0) == 2);
    // J_{1,2} = j(q;q^2) = (q;q)_inf^2 / (q^2;q^2)_inf ... verify multiplicatively
    LaurentSeries j12 = theta_shorthand(ThetaKind::J, 1, 2, 40);
    LaurentSeries lhs = mul(j12, pochhammer_infinite(Monomial::q_power(2), 2, 40));
    LaurentSeries e1 = pochhammer_infinite(Monomial::q_power(1), 1, 40);
    LaurentSeries rhs = mul(e1, e1);
    CHECK(series_equal(truncated(lhs, 35), truncated(rhs, 35)));
}

TEST_CASE("general scalar arguments") {
    // j(2;q): product over (1-2q^k)(1-q^{k+1}/2)(1-q^{k+1}) -- sum form oracle
    LaurentSeries gen = jtheta_general(Monomial(+1, Rational(2), 0), 1, 25);
    LaurentSeries sum = LaurentSeries::zero(25);
    for (long long n = -10; n <= 10; ++n) {
        long long e = n * (n - 1) / 2;
        if (e >= 25) continue;
        Rational c = rational_pow(Rational(2), n);
        if (n % 2 != 0) c = -c;
        sum = add(sum, LaurentSeries(e, {c}, 25));
    }
    CHECK(series_equal(gen, sum));
}
