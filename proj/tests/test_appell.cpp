#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/appell.hpp"
#include "qmock/theta.hpp"

using namespace qmock;

namespace {

// Independent oracle: accumulate j(z;q^M) * m(x,q^M,z) =
// sum_r (-1)^r q^{M binom(r,2)} z^r / (1 - q^{M(r-1)} x z) with plain loops,
// expanding each geometric factor term by term.
LaurentSeries bilateral_oracle(const Monomial& x, const Monomial& z, long long M,
                               long long T) {
    LaurentSeries acc = LaurentSeries::zero(T);
    for (long long r = -40; r <= 40; ++r) {
        Monomial numer = z.power(r).times(Monomial::q_power(M * r * (r - 1) / 2));
        if (r % 2 != 0) numer = numer.negate();
        Monomial u(x.sign * z.sign, x.scalar * z.scalar,
                   M * (r - 1) + x.exponent + z.exponent);
        std::vector<Rational> coef(static_cast<size_t>(2 * T + 80));
        long long off = T + 40;  // window [-off, ...)
        if (u.exponent > 0) {
            Monomial p = Monomial::one();
            while (p.exponent + numer.exponent < T) {
                coef[static_cast<size_t>(p.exponent + off)] += p.signed_scalar();
                p = p.times(u);
            }
        } else if (u.exponent < 0) {
            Monomial v = u.inverse();
            Monomial p = v;
            while (p.exponent + numer.exponent < T) {
                coef[static_cast<size_t>(p.exponent + off)] -= p.signed_scalar();
                p = p.times(v);
            }
        } else {
            coef[static_cast<size_t>(off)] = Rational(1) / (Rational(1) - u.signed_scalar());
        }
        LaurentSeries expand(-off, std::move(coef), T - numer.exponent);
        acc = add(acc, truncated(mul(expand, numer), T));
    }
    return acc;
}

}  // namespace

TEST_CASE("m(x,q,z) against the bilateral oracle") {
    struct Case {
        Monomial x, z;
        long long M;
    };
    const Case cases[] = {
        {Monomial::q_power(1), Monomial::q_power(2), 4},
        {Monomial::one(), Monomial::q_power(1), 2},
        {Monomial(-1, 1, 1), Monomial::q_power(1), 3},
        {Monomial(+1, Rational(2), 0), Monomial::neg_q_power(1), 1},
        {Monomial::q_power(-1), Monomial::q_power(2), 3},
    };
    for (const Case& c : cases) {
        AppellSpec spec(c.x, c.z, c.M);
        CAPTURE(spec.str());
        LaurentSeries lhs = mul(jtheta_general(c.z, c.M, 46), m_series(spec, 40));
        LaurentSeries rhs = bilateral_oracle(c.x, c.z, c.M, 36);
        CHECK(!first_mismatch(truncated(lhs, 36), rhs).has_value());
    }
}

TEST_CASE("pole and zero-denominator detection") {
    CHECK_THROWS_AS(m_series(AppellSpec(Monomial::q_power(1), Monomial::q_power(3), 4), 10),
                    PoleAtSummand);
    CHECK_THROWS_AS(m_series(AppellSpec(Monomial::q_power(1), Monomial::q_power(4), 4), 10),
                    ThetaDenominatorZero);
}

TEST_CASE("functional equations") {
    struct Case {
        Monomial x, z;
    };
    // scalars away from +-1 keep every derived specialization generic
    const Case cases[] = {
        {Monomial(+1, Rational(2), 1), Monomial(+1, Rational(3), 2)},
        {Monomial(-1, Rational(3, 2), 2), Monomial(-1, Rational(5), 1)},
        {Monomial(+1, Rational(3), 1), Monomial(+1, Rational(5), 0)},
    };
    for (long long M : {3ll, 5ll}) {
        for (const Case& c : cases) {
            for (FunctionalEq id : {FunctionalEq::ZShift, FunctionalEq::XInverse,
                                    FunctionalEq::XShift, FunctionalEq::ZFlip}) {
                VerificationReport r =
                    verify_functional_equation(id, c.x, c.z, std::nullopt, M, 35);
                CAPTURE(functional_eq_name(id));
                CAPTURE(r.specialization);
                CAPTURE(r.notes);
                CHECK(r.pass);
            }
            Monomial z1 = Monomial(+1, Rational(7), 1);
            VerificationReport r =
                verify_functional_equation(FunctionalEq::ChangeZ, c.x, c.z, z1, M, 35);
            CAPTURE(r.specialization);
            CHECK(r.pass);
        }
    }
    // unit-scalar case with poles avoided by hand
    VerificationReport r = verify_functional_equation(FunctionalEq::ZShift,
                                                      Monomial::q_power(1),
                                                      Monomial::q_power(3), std::nullopt,
                                                      5, 35);
    CHECK(r.pass);
}

TEST_CASE("sumstar against its own bilateral definition") {
    // hand-rolled partial sum over |n| <= 12 of the regularized sum at x = q
    const long long T = 30;
    Monomial x = Monomial::q_power(1);
    LaurentSeries acc = LaurentSeries::zero(T);
    for (long long n = -12; n <= 12; ++n) {
        LaurentSeries term(n * (n + 1) / 2, {Rational(1)});
        LaurentSeries d1 = add(LaurentSeries(Rational(1)),
                               LaurentSeries::from_monomial(x.times(Monomial::q_power(n))));
        LaurentSeries d2 = add(LaurentSeries(Rational(1)),
                               LaurentSeries::from_monomial(
                                   x.inverse().times(Monomial::q_power(n))));
        term = mul(term, invert_to(d1, T + 30));
        term = mul(term, invert_to(d2, T + 30));
        acc = add(acc, truncated(term, T));
    }
    acc = mul(acc, add(LaurentSeries(Rational(1)),
                       LaurentSeries::from_monomial(x.inverse())));
    acc = mul(acc, invert_to(theta_shorthand(ThetaKind::Jbar, 0, 1, T + 30), T));
    LaurentSeries s = sumstar_series(x, 25);
    CHECK(!first_mismatch(truncated(s, 25), truncated(acc, 25)).has_value());
}

TEST_CASE("Eulerian identities") {
    const long long T = 40;
    for (const Monomial& x : {Monomial(+1, Rational(5, 2), 0), Monomial(-1, Rational(3), 2),
                              Monomial(+1, Rational(2), 1)}) {
        for (EulerianId id : {EulerianId::RLN1, EulerianId::RLN2a, EulerianId::RLN2c,
                              EulerianId::RLN3, EulerianId::RLN4, EulerianId::RLN5}) {
            CAPTURE(eulerian_id_name(id));
            CAPTURE(x.str());
            VerificationReport r = verify_eulerian_identity(id, x, T);
            CAPTURE(r.specialization);
            CAPTURE(r.notes);
            if (!r.pass) {
                CAPTURE(r.mismatch_exponent.value_or(-1));
                CAPTURE(r.lhs_coefficient);
                CAPTURE(r.rhs_coefficient);
            }
            CHECK(r.pass);
        }
    }
    for (const Monomial& x : {Monomial(-1, Rational(1, 4), 0), Monomial(-1, Rational(4), 1),
                              Monomial(-1, Rational(9, 4), -1)}) {
        VerificationReport r = verify_eulerian_identity(EulerianId::RLN2b, x, T);
        CAPTURE(x.str());
        CAPTURE(r.notes);
        CHECK(r.pass);
    }
    // x = 1 where admissible
    for (EulerianId id : {EulerianId::RLN1, EulerianId::RLN2a, EulerianId::RLN3,
                          EulerianId::RLN4, EulerianId::RLN5}) {
        VerificationReport r = verify_eulerian_identity(id, Monomial::one(), T);
        CAPTURE(eulerian_id_name(id));
        CHECK(r.pass);
    }
}

TEST_CASE("bilateral identity") {
    struct Case {
        Monomial a, b;
    };
    const Case cases[] = {
        {Monomial(+1, Rational(2), 1), Monomial(+1, Rational(3), 2)},
        {Monomial(-1, Rational(5, 2), 1), Monomial(+1, Rational(7), 1)},
        {Monomial(+1, Rational(2), 0), Monomial(+1, Rational(3), 1)},
    };
    for (const Case& c : cases) {
        VerificationReport r = verify_bilateral_347(c.a, c.b, 35);
        CAPTURE(r.specialization);
        if (!r.pass) {
            CAPTURE(r.mismatch_exponent.value_or(-1));
            CAPTURE(r.lhs_coefficient);
            CAPTURE(r.rhs_coefficient);
        }
        CHECK(r.pass);
    }
}
