#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "qmock/appell.hpp"
#include "qmock/mocklib.hpp"
#include "qmock/radial.hpp"
#include "qmock/theta.hpp"

using namespace qmock;

namespace {

// evaluate an exact truncated series at a numeric point (Horner over the window)
BigComplex eval_exact(const LaurentSeries& s, const BigComplex& q) {
    BigComplex r;
    for (long long e = s.stored_end() - 1; e >= s.min_exp(); --e) {
        r = r * q;
        r += BigComplex(s.coefficient(e), BigFloat::default_precision());
    }
    long long m = s.min_exp();
    for (long long i = 0; i < (m > 0 ? m : -m); ++i)
        r = (m > 0) ? r * q : r / q;
    return r;
}

bool close(const BigComplex& a, const BigComplex& b, double tol) {
    return (a - b).abs() < BigFloat(tol);
}

}  // namespace

TEST_CASE("theta sum against the exact series engine") {
    BigFloat::default_precision(80);
    BigComplex q{BigFloat(1) / 2, BigFloat(0)};
    // j(q^2; q), j(q; q^3) = (q;q)_inf, j(-q; q^2)
    struct { Monomial x; long long M; } cases[] = {
        {Monomial::q_power(2), 1},
        {Monomial::q_power(1), 3},
        {Monomial(-1, 1, 1), 2},
    };
    for (auto& c : cases) {
        LaurentSeries s = jtheta_general(c.x, c.M, 120);
        BigComplex xe = BigFloat(c.x.sign) * BigComplex(c.x.scalar, 80);
        for (long long i = 0; i < c.x.exponent; ++i) xe *= q;
        BigComplex qb = q;
        for (long long i = 1; i < c.M; ++i) qb *= q;
        CHECK(close(numeric_jtheta(xe, qb, 256), eval_exact(s, q), 1e-30));
    }
    // partial-product cross-check: (q;q)_inf at q = 1/2
    BigComplex prod{BigFloat(1), BigFloat(0)};
    BigComplex qn{BigFloat(1), BigFloat(0)};
    for (int n = 1; n <= 200; ++n) {
        qn *= q;
        prod *= BigComplex{BigFloat(1), BigFloat(0)} - qn;
    }
    CHECK(close(numeric_jtheta(q, q * q * q, 256), prod, 1e-55));
}

TEST_CASE("appell sum against the exact series engine") {
    BigFloat::default_precision(80);
    BigComplex q{BigFloat(1) / 3, BigFloat(0)};
    // m(q^2, q, -q): pole-free bilateral denominators
    AppellSpec spec(Monomial::q_power(2), Monomial(-1, 1, 1), 1);
    REQUIRE(!spec.has_pole());
    LaurentSeries s = m_series(spec, 90);
    BigComplex num = numeric_appell(q * q, q, -q, 256);
    CHECK(close(num, eval_exact(s, q), 1e-35));
}

TEST_CASE("numeric series evaluators against the exact catalog") {
    BigFloat::default_precision(80);
    BigComplex q{BigFloat(1) / 3, BigFloat(0)};
    Specialization one{Monomial::one(), 1};
    // S2 is evaluated through the Appell sum, S4 through the regularized
    // bilateral sum; both must agree with the exact Eulerian builders.
    for (SeriesId id : {SeriesId::f3, SeriesId::w3, SeriesId::S1, SeriesId::S3,
                        SeriesId::B2_alt, SeriesId::psi10, SeriesId::S2, SeriesId::S4}) {
        CAPTURE(series_name(id));
        LaurentSeries s = build_series(id, one, 95);
        CHECK(close(eval_series_numeric(id, q, 256), eval_exact(s, q), 1e-30));
    }
    // B2 routes to the same Eulerian form as B2_alt
    CHECK(close(eval_series_numeric(SeriesId::B2, q, 256),
                eval_series_numeric(SeriesId::B2_alt, q, 256), 1e-60));
    CHECK_THROWS_AS(eval_series_numeric(SeriesId::R, q, 256), UnknownId);
}

TEST_CASE("f3 partial sum and term-cap stability") {
    BigFloat::default_precision(80);
    BigComplex q{BigFloat(1) / 2, BigFloat(0)};
    // 40-term partial sum in exact rationals
    Rational partial(1);
    Rational qr(1, 2), poch(1), qn(1);
    for (int n = 1; n <= 40; ++n) {
        qn *= qr;
        poch *= 1 + qn;
        Rational qsq(1);
        for (int i = 0; i < n * n; ++i) qsq *= qr;
        partial += qsq / (poch * poch);
    }
    BigComplex f = eval_series_numeric(SeriesId::f3, q, 256);
    // tail beyond n = 40 is below q^{1600}
    CHECK(close(f, BigComplex(partial, 80), 1e-60));

    BigComplex w1 = eval_series_numeric(SeriesId::w3, BigComplex{BigFloat(1) / 3, BigFloat(0)},
                                        256, 100000);
    BigComplex w2 = eval_series_numeric(SeriesId::w3, BigComplex{BigFloat(1) / 3, BigFloat(0)},
                                        256, 200000);
    CHECK(close(w1, w2, 1e-60));
}

TEST_CASE("radial limit: third order mock theta at q -> -1") {
    RadialOptions opt;
    opt.schedule = {4, 5, 6, 7, 8, 9, 10};
    RadialResult r = radial_verify(RadialTheorem::FOR, 1, 0, 1, opt);
    CHECK(r.root_order == 2);
    CHECK(r.pass);
    // the limit is the finite sum -4 sum_{n=0}^{0} (-z;z)_n^2 z^{n+1} = 4 at z = -1
    CHECK(close(r.exact_rhs, BigComplex{BigFloat(4), BigFloat(0)}, 1e-40));
    CHECK((r.limit - r.exact_rhs).abs() < BigFloat(1e-6));
    for (const RadialSample& s : r.samples)
        CHECK(s.value.abs() < BigFloat(1e6));  // samples stay bounded
}

TEST_CASE("radial limit invariants: schedule and precision robustness") {
    RadialOptions a;
    a.schedule = {4, 5, 6, 7, 8, 9, 10, 11, 12};
    RadialResult ra = radial_verify(RadialTheorem::FOR, 2, 0, 1, a);
    RadialOptions b = a;
    b.schedule = {6, 7, 8, 9, 10, 11, 12, 13, 14};
    RadialResult rb = radial_verify(RadialTheorem::FOR, 2, 0, 1, b);
    CHECK(ra.pass);
    CHECK(rb.pass);
    CHECK((ra.limit - rb.limit).abs() < BigFloat(10 * a.tolerance));

    RadialOptions c = a;
    c.precision_bits = 512;
    RadialResult rc = radial_verify(RadialTheorem::FOR, 2, 0, 1, c);
    CHECK(rc.pass);
    CHECK((ra.limit - rc.limit).abs() < BigFloat(a.tolerance));
}

TEST_CASE("radial limit at a complex root") {
    RadialOptions opt;
    opt.schedule = {4, 5, 6, 7, 8, 9, 10, 11};
    // B2 at k=1: zeta is a primitive cube root of unity
    RadialResult r = radial_verify(RadialTheorem::B2, 1, 0, 1, opt);
    CHECK(r.root_order == 3);
    CHECK(r.pass);
    // conjugate root gives the conjugate limit
    RadialResult rc = radial_verify(RadialTheorem::B2, 1, 0, 2, opt);
    CHECK(rc.pass);
    CHECK((r.limit - rc.limit.conj()).abs() < BigFloat(10 * opt.tolerance));
}

TEST_CASE("radial verification rejects bad parameters") {
    CHECK_THROWS_AS(radial_verify(RadialTheorem::EX1, 2, 0, 1, {}), InadmissibleOrder);
    // root index must be coprime to the root order (FOR k=2 -> order 4)
    CHECK_THROWS_AS(radial_verify(RadialTheorem::FOR, 2, 0, 2, {}), InadmissibleOrder);
}

TEST_CASE("radial result serializes to json") {
    RadialOptions opt;
    opt.schedule = {4, 5, 6, 7, 8};
    RadialResult r = radial_verify(RadialTheorem::FOR, 2, 0, 1, opt);
    nlohmann::json j = nlohmann::json::parse(radial_result_json(r));
    CHECK(j["theorem"] == "FOR");
    CHECK(j["k"] == 2);
    CHECK(j["root_order"] == 4);
    CHECK(j["root_index"] == 1);
    CHECK(j["schedule"].size() == 5);
    CHECK(j["pass"].is_boolean());
    CHECK(j.contains("limit"));
    CHECK(j.contains("exact_rhs"));
    CHECK(j.contains("difference"));
}
