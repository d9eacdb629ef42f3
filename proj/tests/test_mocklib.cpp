#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/mocklib.hpp"
#include "qmock/series.hpp"

using namespace qmock;

namespace {

Specialization sp(Monomial x, long long base = 1) { return Specialization{std::move(x), base}; }

unsigned long long uc(const std::vector<UnimodalCount>& v, long long n, long long m) {
    for (const auto& c : v)
        if (c.n == n && c.m == m) return c.count;
    return 0;
}

}  // namespace

TEST_CASE("series catalog basics") {
    CHECK(std::string(series_name(SeriesId::g2_tail)) == "g2_tail");
    CHECK(series_id_from_name("phi10") == SeriesId::phi10);
    CHECK_THROWS_AS(series_id_from_name("nope"), UnknownId);

    // third-order f: 1 + q - 2q^2 + 3q^3 - 3q^4 + ...
    LaurentSeries f = build_series(SeriesId::f3, sp(Monomial::one()), 5);
    CHECK(f.coefficient(0) == 1);
    CHECK(f.coefficient(1) == 1);
    CHECK(f.coefficient(2) == -2);
    CHECK(f.coefficient(3) == 3);
    CHECK(f.coefficient(4) == -3);

    // a base substitution only rescales the q-structure
    LaurentSeries w1 = build_series(SeriesId::w3, sp(Monomial::one()), 10);
    LaurentSeries w2 = build_series(SeriesId::w3, sp(Monomial::one(), 2), 20);
    CHECK(series_equal(substitute_q_power(w1, 2), w2));
}

TEST_CASE("two Eulerian forms of g3 agree for generic scalars") {
    const Monomial xs[] = {Monomial(+1, 2, 0), Monomial(-1, Rational(3, 2), 1),
                           Monomial(+1, Rational(5, 2), -1), Monomial(-1, Rational(1, 3), 0),
                           Monomial(+1, 7, 2)};
    const IdentityEntry& e = registry_entry("g3-equiv");
    for (const Monomial& x : xs) {
        VerificationReport r = check_identity(e, sp(x), 40);
        CAPTURE(r.specialization);
        CHECK(r.pass);
    }
}

TEST_CASE("registry sweep at order 40") {
    for (const IdentityEntry& e : registry()) {
        CAPTURE(e.id);
        CHECK((e.fixed || e.default_specs.size() >= 3));
        for (const Specialization& s : e.default_specs) {
            CAPTURE(s.str());
            VerificationReport r = check_identity(e, s, 40);
            if (!r.pass) {
                CAPTURE(r.mismatch_exponent.value_or(-1));
                CAPTURE(r.lhs_coefficient);
                CAPTURE(r.rhs_coefficient);
            }
            CHECK(r.pass == !e.expected_mismatch);
            CHECK(r.id == e.id);
        }
    }
}

TEST_CASE("documented display discrepancies") {
    // exactly two entries carry an unrepairable display, both annotated
    std::vector<std::string> flagged;
    for (const IdentityEntry& e : registry())
        if (e.expected_mismatch) {
            CHECK(!e.discrepancy.empty());
            flagged.push_back(e.id);
        }
    CHECK(flagged == std::vector<std::string>{"gm-mixed", "master"});

    // tail-fe is stored with 2J_2; the printed J_2 form would be twice the left
    // side, so the left side must be nonzero at the default specializations for
    // the distinction to have content
    const IdentityEntry& fe = registry_entry("tail-fe");
    for (const Specialization& s : fe.default_specs) {
        CAPTURE(s.str());
        LaurentSeries l = fe.lhs(s, 40);
        CHECK(l.valuation().has_value());
        CHECK(series_equal(l, fe.rhs(s, 40)));
    }

    // master fails exactly as gm-mixed fails: the residuals agree coefficientwise,
    // so the theta algebra relating the two displays is exact
    const IdentityEntry& gm = registry_entry("gm-mixed");
    const IdentityEntry& ma = registry_entry("master");
    for (const Specialization& s : gm.default_specs) {
        CAPTURE(s.str());
        LaurentSeries dg = sub(gm.rhs(s, 40), gm.lhs(s, 40));
        LaurentSeries dm = sub(ma.rhs(s, 40), ma.lhs(s, 40));
        CHECK(dg.valuation().has_value());
        CHECK(series_equal(dg, dm));
    }
}

TEST_CASE("genericity scan flags vanishing denominator thetas") {
    const IdentityEntry& ub = registry_entry("U-expansion-b");
    CHECK(genericity_scan(ub, sp(Monomial(-1, 1, 1))).size() == 1);  // j(w^4;q^2) dies
    CHECK(genericity_scan(ub, sp(Monomial::q_power(1), 4)).empty());
    CHECK(!genericity_scan(ub, sp(Monomial::q_power(1), 1)).empty());

    const IdentityEntry& ms = registry_entry("master");
    CHECK(genericity_scan(ms, sp(Monomial::q_power(1), 1)).size() == 1);  // j(x^2;q^2)
    CHECK(genericity_scan(ms, sp(Monomial::q_power(1), 2)).empty());

    CHECK_THROWS_AS(check_identity(ms, sp(Monomial::q_power(1), 1), 10),
                    NonGenericSpecialization);
}

TEST_CASE("admissible specialization search") {
    const IdentityEntry& e = registry_entry("S1-id");
    std::vector<Specialization> found = find_admissible_specializations(e, SearchBounds{});
    CHECK(found.size() >= 3);
    bool has_q = false, has_one_neg = false;
    for (const Specialization& s : found) {
        if (s.x == Monomial::q_power(1) && s.base == 1) has_q = true;
        if (s.x == Monomial::minus_one() && s.base == 1) has_one_neg = true;
    }
    CHECK(has_q);
    CHECK(!has_one_neg);  // j(-w;q) = j(1;q) vanishes there
}

TEST_CASE("strongly unimodal counts") {
    std::vector<UnimodalCount> v = unimodal_counts(16);
    CHECK(uc(v, 1, 0) == 1);
    CHECK(uc(v, 2, 0) == 1);
    CHECK(uc(v, 3, -1) == 1);
    CHECK(uc(v, 3, 0) == 1);
    CHECK(uc(v, 3, 1) == 1);
    CHECK(uc(v, 4, 0) == 2);  // (4) and (1,2,1)
    CHECK(uc(v, 4, 1) == 1);

    // counts are symmetric under reversing the sequence
    std::vector<UnimodalCount> w = unimodal_counts(16, -1);
    for (const auto& c : v) CHECK(uc(w, c.n, -c.m) == c.count);
    for (const auto& c : v) CHECK(uc(v, c.n, -c.m) == c.count);
}

TEST_CASE("bivariate unimodal generating polynomial") {
    BivariatePolynomial p = build_bivariate_U(17);
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(0, 0) == 0);

    // coefficient of w^m q^n is (-1)^m times the rank count
    std::vector<UnimodalCount> v = unimodal_counts(16);
    for (long long n = 1; n <= 16; ++n) {
        for (long long m = -n; m <= n; ++m) {
            Rational expect = Rational(uc(v, n, m));
            if (m % 2 != 0) expect = -expect;
            CAPTURE(n);
            CAPTURE(m);
            CHECK(p.at(m, n) == expect);
        }
    }

    // evaluations match the one-variable series
    LaurentSeries at1 = evaluate_bivariate(p, Monomial::one());
    CHECK(series_equal(at1, build_series(SeriesId::U, sp(Monomial::one()), 17)));
    LaurentSeries atm1 = evaluate_bivariate(p, Monomial::minus_one());
    CHECK(series_equal(atm1, build_series(SeriesId::U, sp(Monomial::minus_one()), 17)));

    CHECK_THROWS_AS(evaluate_bivariate(p, Monomial::q_power(1)), QmockError);
}
