#include "qmock/eulerian.hpp"

#include <algorithm>

namespace qmock {

namespace {

// Exact valuation of (u; q^step)_count: factors at exponent <= 0 contribute
// their exponent (the factor's lowest term is the -u part) or 0 for the
// constant 1 - u case.
long long poch_valuation(const Monomial& u, long long step, long long count) {
    long long v = 0;
    if (count <= 0) return 0;
    for (long long i = 0; i < count; ++i) {
        long long e = u.exponent + i * step;
        if (e > 0) break;
        if (e < 0) v += e;
    }
    return v;
}

// true once every factor a pochhammer family can still gain has exponent > 0
bool poch_stabilized(const PochSpec& p, long long n) {
    return p.u.exponent + p.count(n) * p.step > 0;
}

}  // namespace

LaurentSeries eulerian_series(const EulerianSum& sum, long long trunc) {
    constexpr long long kTermCap = 200000;
    const long long T = trunc;

    // running products, updated as counts grow
    std::vector<long long> num_count(sum.num.size(), 0), den_count(sum.den.size(), 0);
    LaurentSeries num_prod(Rational(1));
    LaurentSeries deninv_prod(Rational(1));
    bool num_is_zero = false;

    LaurentSeries acc = LaurentSeries::zero(T);
    long long small_streak = 0;

    for (long long n = sum.n0;; ++n) {
        if (n - sum.n0 > kTermCap)
            throw OrderOverflow("eulerian_series: term cap exceeded");

        for (size_t k = 0; k < sum.num.size(); ++k) {
            long long want = sum.num[k].count(n);
            if (want < num_count[k])
                throw QmockError("eulerian_series: decreasing pochhammer count");
            for (; num_count[k] < want; ++num_count[k]) {
                Monomial f(sum.num[k].u.sign, sum.num[k].u.scalar,
                           sum.num[k].u.exponent + num_count[k] * sum.num[k].step);
                LaurentSeries factor =
                    sub(LaurentSeries(Rational(1)), LaurentSeries::from_monomial(f));
                num_prod = truncated(mul(num_prod, factor), T);
                if (num_prod.is_stored_zero()) num_is_zero = true;
            }
        }
        for (size_t k = 0; k < sum.den.size(); ++k) {
            long long want = sum.den[k].count(n);
            if (want < den_count[k])
                throw QmockError("eulerian_series: decreasing pochhammer count");
            for (; den_count[k] < want; ++den_count[k]) {
                Monomial f(sum.den[k].u.sign, sum.den[k].u.scalar,
                           sum.den[k].u.exponent + den_count[k] * sum.den[k].step);
                if (f.exponent == 0 && f.signed_scalar() == 1)
                    throw DivergenceAtSpecialization(
                        "eulerian_series: denominator factor 1 - (" + f.str() +
                        ") vanishes identically");
                LaurentSeries g = [&] {
                    try {
                        return geom_inverse(f, T + std::max(0ll, -f.exponent) + 1);
                    } catch (const PoleAtSummand&) {
                        throw DivergenceAtSpecialization(
                            "eulerian_series: denominator factor 1 - (" + f.str() +
                            ") vanishes identically");
                    }
                }();
                deninv_prod = truncated(mul(deninv_prod, g), T);
            }
        }

        Monomial m = sum.mon(n);
        if (!num_is_zero) {
            LaurentSeries term = mul(mul(num_prod, deninv_prod), m);
            acc = add(acc, truncated(term, T));
        }

        // exact valuation of the current and all later terms
        long long val = m.exponent;
        for (size_t k = 0; k < sum.num.size(); ++k)
            val += poch_valuation(sum.num[k].u, sum.num[k].step, num_count[k]);
        for (size_t k = 0; k < sum.den.size(); ++k)
            val -= poch_valuation(sum.den[k].u, sum.den[k].step, den_count[k]);

        bool stabilized = true;
        for (const auto& p : sum.num) stabilized = stabilized && poch_stabilized(p, n);
        for (const auto& p : sum.den) stabilized = stabilized && poch_stabilized(p, n);

        if (num_is_zero && stabilized) break;  // a numerator factor is exactly zero forever
        if (val >= T && stabilized)
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 6 && n >= sum.n0 + 8) break;
    }

    LaurentSeries r = mul(sum.prefactor, acc);
    return truncated(add(r, sum.addend), T);
}

}  // namespace qmock
