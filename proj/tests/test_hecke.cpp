#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/hecke.hpp"

using namespace qmock;

namespace {

// naive double loop over |r|,|s| <= 30
LaurentSeries brute_force(const HeckeSpec& h, long long trunc) {
    long long lo = 0;
    std::vector<std::pair<long long, Rational>> terms;
    for (long long r = -30; r <= 30; ++r) {
        for (long long s = -30; s <= 30; ++s) {
            bool pos = r >= 0 && s >= 0;
            bool neg = r < 0 && s < 0;
            if (!pos && !neg) continue;
            long long e = h.a * (r * (r - 1) / 2) + h.b * r * s + h.c * (s * (s - 1) / 2) +
                          r * h.x.exponent + s * h.y.exponent;
            if (e >= trunc) continue;
            Rational c = rational_pow(h.x.signed_scalar(), r) *
                         rational_pow(h.y.signed_scalar(), s);
            if ((r + s) % 2 != 0) c = -c;
            if (neg) c = -c;
            terms.emplace_back(e, c);
            lo = std::min(lo, e);
        }
    }
    std::vector<Rational> coef(static_cast<size_t>(trunc - lo));
    for (const auto& [e, c] : terms) coef[static_cast<size_t>(e - lo)] += c;
    return LaurentSeries(lo, std::move(coef), trunc);
}

}  // namespace

TEST_CASE("double sum against the naive loop") {
    const HeckeSpec specs[] = {
        HeckeSpec(1, 3, 6, Monomial::q_power(2), Monomial::q_power(5)),
        HeckeSpec(1, 3, 6, Monomial::q_power(1), Monomial::q_power(5)),
        HeckeSpec(1, 3, 6, Monomial(-1, 1, 2), Monomial::q_power(7)),
        HeckeSpec(1, 3, 6, Monomial(+1, Rational(2), -1), Monomial::q_power(7)),
        HeckeSpec(2, 1, 2, Monomial::q_power(1), Monomial::q_power(1)),
        HeckeSpec(3, -2, 3, Monomial::q_power(0), Monomial::neg_q_power(1)),
    };
    // trunc small enough that |r|,|s| <= 30 covers every contributing term
    for (const HeckeSpec& h : specs) {
        CAPTURE(h.str());
        CHECK(series_equal(f_abc(h, 40), brute_force(h, 40)));
    }
}

TEST_CASE("quadrant structure") {
    HeckeSpec h(1, 3, 6, Monomial::q_power(2), Monomial::q_power(5));
    LaurentSeries f = f_abc(h, 30);
    CHECK(f.coefficient(0) == 1);  // the (0,0) term

    // r<->s symmetry of the definition: f_{a,b,c}(x,y) = f_{c,b,a}(y,x)
    LaurentSeries g = f_abc(HeckeSpec(6, 3, 1, Monomial::q_power(5), Monomial::q_power(2)), 30);
    CHECK(series_equal(f, g));
}

TEST_CASE("growth validation") {
    CHECK_THROWS_AS(f_abc(HeckeSpec(0, 1, 1, Monomial::one(), Monomial::one()), 10),
                    NonTerminatingQuadrant);
    CHECK_THROWS_AS(f_abc(HeckeSpec(1, -1, 1, Monomial::one(), Monomial::one()), 10),
                    NonTerminatingQuadrant);
    CHECK_THROWS_AS(f_abc(HeckeSpec(1, -5, 2, Monomial::one(), Monomial::one()), 10),
                    NonTerminatingQuadrant);
}

TEST_CASE("tail identity") {
    for (const Monomial& x : {Monomial::q_power(1), Monomial(-1, 1, 2), Monomial::one(),
                              Monomial(+1, Rational(2), 1)}) {
        VerificationReport r = verify_g2_tail_hecke(x, 40);
        CAPTURE(r.specialization);
        if (!r.pass) {
            CAPTURE(r.mismatch_exponent.value_or(-1));
            CAPTURE(r.lhs_coefficient);
            CAPTURE(r.rhs_coefficient);
        }
        CHECK(r.pass);
    }
}
