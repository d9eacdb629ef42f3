#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmock/series.hpp"

using namespace qmock;

namespace {

LaurentSeries random_series(std::mt19937_64& rng, long long min_exp, int len,
                            long long valid) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Rational> c;
    for (int i = 0; i < len; ++i) c.emplace_back(Rational(num(rng), den(rng)));
    return LaurentSeries(min_exp, std::move(c), valid);
}

}  // namespace

TEST_CASE("monomial algebra") {
    Monomial a(+1, Rational(-3, 2), 4);  // negative scalar folds into sign
    CHECK(a.sign == -1);
    CHECK(a.scalar == Rational(3, 2));
    CHECK(a.exponent == 4);

    Monomial b = Monomial::neg_q_power(1);
    CHECK(a.times(b) == Monomial(+1, Rational(3, 2), 5));
    CHECK(a.inverse().times(a) == Monomial::one());
    CHECK(b.power(3) == Monomial(-1, 1, 3));
    CHECK(b.power(-2) == Monomial(+1, 1, -2));
    CHECK(a.substituted(3).exponent == 12);
    CHECK_THROWS_AS(Monomial(+1, Rational(0), 0), QmockError);
}

TEST_CASE("series basics and truncation bookkeeping") {
    LaurentSeries s(-2, {Rational(1), Rational(0), Rational(-5)}, 10);
    CHECK(s.coefficient(-2) == 1);
    CHECK(s.coefficient(-1) == 0);
    CHECK(s.coefficient(0) == -5);
    CHECK(s.coefficient(9) == 0);
    CHECK_THROWS_AS(s.coefficient(10), BeyondTruncation);
    CHECK(s.valuation() == -2);

    LaurentSeries z = LaurentSeries::zero(5);
    CHECK(z.is_stored_zero());
    CHECK(!z.valuation().has_value());

    LaurentSeries t = truncated(s, 0);
    CHECK(t.valid_order() == 0);
    CHECK_THROWS_AS(t.coefficient(0), BeyondTruncation);
}

TEST_CASE("add/sub/scalar") {
    LaurentSeries a(0, {Rational(1), Rational(2)});
    LaurentSeries b(1, {Rational(-2), Rational(3)});
    LaurentSeries s = add(a, b);
    CHECK(s.coefficient(0) == 1);
    CHECK(s.coefficient(1) == 0);
    CHECK(s.coefficient(2) == 3);
    CHECK(series_equal(sub(s, b), a));
    CHECK(scalar_mul(Rational(1, 2), a).coefficient(1) == 1);
}

TEST_CASE("parallel and serial products agree") {
    std::mt19937_64 rng(20240814);
    for (int it = 0; it < 40; ++it) {
        LaurentSeries a = random_series(rng, -5 + (it % 3), 30, 40);
        LaurentSeries b = random_series(rng, -2, 25, 35);
        LaurentSeries p = mul(a, b);
        LaurentSeries q = mul_serial(a, b);
        CHECK(series_equal(p, q));
        CHECK(p.valid_order() == q.valid_order());
    }
}

TEST_CASE("product validity bound") {
    LaurentSeries a(0, {Rational(1), Rational(1)}, 10);
    LaurentSeries b(2, {Rational(1)}, 12);
    LaurentSeries p = mul(a, b);
    // valid = min(10 + 2, 12 + 0)
    CHECK(p.valid_order() == 12);
    CHECK(p.coefficient(2) == 1);
    CHECK(p.coefficient(3) == 1);
}

TEST_CASE("inverse") {
    // 1/(1-q) = 1 + q + q^2 + ...
    LaurentSeries one_minus_q(0, {Rational(1), Rational(-1)});
    LaurentSeries inv = invert_to(one_minus_q, 30);
    for (long long e = 0; e < 30; ++e) CHECK(inv.coefficient(e) == 1);

    // negative valuation: 1/(q^{-2} - q^{-1}) = q^2/(1-q)
    LaurentSeries f(-2, {Rational(1), Rational(-1)});
    LaurentSeries g = invert_to(f, 20);
    CHECK(g.valuation() == 2);
    for (long long e = 2; e < 20; ++e) CHECK(g.coefficient(e) == 1);

    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        LaurentSeries a = random_series(rng, -3, 20, 25);
        if (!a.valuation() || a.coefficient(*a.valuation()) == 0) continue;
        LaurentSeries r = mul(a, invert_to(a, 15));
        CHECK(r.coefficient(0) == 1);
        for (long long e = 1; e < 10; ++e) CHECK(r.coefficient(e) == 0);
    }
    CHECK_THROWS_AS(invert_to(LaurentSeries::zero(50), 10), AllZeroPrefix);
}

TEST_CASE("geometric inverse of a monomial") {
    LaurentSeries pos = geom_inverse(Monomial(+1, Rational(1, 2), 3), 20);
    CHECK(pos.coefficient(0) == 1);
    CHECK(pos.coefficient(3) == Rational(1, 2));
    CHECK(pos.coefficient(6) == Rational(1, 4));
    CHECK(pos.coefficient(4) == 0);

    // 1/(1-q^{-2}) = -q^2/(1-q^2)
    LaurentSeries neg = geom_inverse(Monomial::q_power(-2), 20);
    CHECK(neg.coefficient(0) == 0);
    CHECK(neg.coefficient(2) == -1);
    CHECK(neg.coefficient(4) == -1);

    LaurentSeries c = geom_inverse(Monomial(+1, Rational(3), 0), 20);
    CHECK(c.coefficient(0) == Rational(-1, 2));
    CHECK_THROWS_AS(geom_inverse(Monomial::one(), 10), PoleAtSummand);
}

TEST_CASE("pochhammer products") {
    // (q;q)_inf: Euler's pentagonal number series
    LaurentSeries euler = pochhammer_infinite(Monomial::q_power(1), 1, 40);
    for (long long e = 0; e < 40; ++e) {
        Rational expect(0);
        for (long long k = -6; k <= 6; ++k)
            if (k * (3 * k - 1) / 2 == e) expect += (k % 2 == 0 ? 1 : -1);
        CHECK(euler.coefficient(e) == expect);
    }

    // partition generating function 1/(q;q)_inf
    static const long long kP[] = {1,  1,  2,  3,   5,   7,   11,  15,  22,  30, 42,
                                   56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    LaurentSeries parts = invert_to(euler, 21);
    for (long long e = 0; e <= 20; ++e) CHECK(parts.coefficient(e) == kP[e]);

    // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
    LaurentSeries fin = pochhammer_finite(Monomial::q_power(1), 1, 3, 30);
    CHECK(fin.coefficient(0) == 1);
    CHECK(fin.coefficient(1) == -1);
    CHECK(fin.coefficient(2) == -1);
    CHECK(fin.coefficient(3) == 0);
    CHECK(fin.coefficient(4) == 1);
    CHECK(fin.coefficient(5) == 1);
    CHECK(fin.coefficient(6) == -1);
}

TEST_CASE("substitute and mismatch helpers") {
    LaurentSeries a(0, {Rational(1), Rational(2)}, 10);
    LaurentSeries b = substitute_q_power(a, 3);
    CHECK(b.coefficient(0) == 1);
    CHECK(b.coefficient(3) == 2);
    CHECK(b.valid_order() == 30);

    LaurentSeries c(0, {Rational(1), Rational(2), Rational(5)}, 10);
    auto mm = first_mismatch(a, c);
    REQUIRE(mm.has_value());
    CHECK(*mm == 2);
    CHECK(!first_mismatch(a, truncated(c, 2)).has_value());
}

TEST_CASE("build_to_order retries") {
    // builder loses 10 orders of validity; the retry slack hides that
    LaurentSeries s = build_to_order(25, [](long long T) {
        return truncated(geom_inverse(Monomial::q_power(1), T), T - 10);
    });
    CHECK(s.valid_order() == 25);
    CHECK(s.coefficient(24) == 1);
}
