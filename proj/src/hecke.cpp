#include "qmock/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmock/eulerian.hpp"
#include "qmock/theta.hpp"
#include "qmock/verify_util.hpp"

namespace qmock {

namespace {

// exponent of the (r,s) term, in units of the base
long long term_exp(const HeckeSpec& h, long long r, long long s) {
    return h.a * (r * (r - 1) / 2) + h.b * r * s + h.c * (s * (s - 1) / 2) +
           r * h.x.exponent + s * h.y.exponent;
}

// The quadratic part (a/2)u^2 + b uv + (c/2)v^2 must be positive on the closed
// quadrant u,v >= 0, not both zero: a > 0, c > 0, and for b < 0 the interior
// minimum must stay positive, i.e. b > -sqrt(ac).
void validate_growth(const HeckeSpec& h) {
    if (h.a <= 0 || h.c <= 0)
        throw NonTerminatingQuadrant("f_abc: needs a > 0 and c > 0 in " + h.str());
    if (h.b < 0 && static_cast<double>(h.b) * h.b >= static_cast<double>(h.a) * h.c)
        throw NonTerminatingQuadrant("f_abc: quadrant ray with nonpositive growth in " +
                                     h.str());
    // boundary rays (1,0) and (0,1) checked numerically, as stated
    for (long long t : {64ll, 128ll}) {
        if (term_exp(h, t, 0) <= term_exp(h, t / 2, 0) ||
            term_exp(h, 0, t) <= term_exp(h, 0, t / 2) ||
            term_exp(h, -t, 0) <= term_exp(h, -t / 2, 0) ||
            term_exp(h, 0, -t) <= term_exp(h, 0, -t / 2) ||
            term_exp(h, t, t) <= term_exp(h, t / 2, t / 2) ||
            term_exp(h, -t, -t) <= term_exp(h, -t / 2, -t / 2))
            throw NonTerminatingQuadrant("f_abc: boundary ray fails to grow in " + h.str());
    }
}

}  // namespace

HeckeSpec::HeckeSpec(long long a_, long long b_, long long c_, Monomial x_, Monomial y_,
                     long long M)
    : a(a_), b(b_), c(c_), x(std::move(x_)), y(std::move(y_)), base(M) {
    if (M < 1) throw QmockError("HeckeSpec: base must be >= 1");
}

std::string HeckeSpec::str() const {
    std::ostringstream os;
    os << "f_{" << a << "," << b << "," << c << "}(" << x.str() << ", " << y.str()
       << ", q^" << base << ")";
    return os.str();
}

LaurentSeries f_abc(const HeckeSpec& h, long long trunc) {
    validate_growth(h);
    const long long M = h.base;
    const long long bound = trunc;  // exponents are compared in base units

    // min exponent can be negative when x or y has a negative exponent
    long long lo = 0;
    std::vector<std::pair<long long, Rational>> terms;

    auto scan_quadrant = [&](int quadrant) {  // +1: r,s >= 0; -1: r,s <= -1
        long long r = quadrant > 0 ? 0 : -1;
        long long dead_rows = 0;
        for (;; r += quadrant) {
            long long row_min = LaurentSeries::kInfiniteOrder;
            long long s = quadrant > 0 ? 0 : -1;
            long long dead = 0;
            for (;; s += quadrant) {
                long long e = term_exp(h, r, s);
                row_min = std::min(row_min, e);
                if (e < bound) {
                    dead = 0;
                    Rational c = rational_pow(h.x.scalar, r) * rational_pow(h.y.scalar, s);
                    int sgn = 1;
                    if ((r + s) % 2 != 0) sgn = -sgn;
                    if (h.x.sign < 0 && r % 2 != 0) sgn = -sgn;
                    if (h.y.sign < 0 && s % 2 != 0) sgn = -sgn;
                    if (quadrant < 0) sgn = -sgn;
                    terms.emplace_back(e, sgn > 0 ? c : Rational(-c));
                } else if (++dead >= 16) {
                    break;
                }
                if (std::abs(s) > 4 * (bound + 8) + 64)
                    throw NonTerminatingQuadrant("f_abc: s range overflow in " + h.str());
            }
            if (row_min >= bound) {
                if (++dead_rows >= 8) break;
            } else {
                dead_rows = 0;
            }
            if (std::abs(r) > 4 * (bound + 8) + 64)
                throw NonTerminatingQuadrant("f_abc: r range overflow in " + h.str());
        }
    };
    scan_quadrant(+1);
    scan_quadrant(-1);

    for (const auto& [e, c] : terms) lo = std::min(lo, e);
    std::vector<Rational> coef(static_cast<size_t>(bound - lo));
    for (const auto& [e, c] : terms) coef[static_cast<size_t>(e - lo)] += c;
    LaurentSeries out(lo, std::move(coef), bound);
    return M == 1 ? out : substitute_q_power(out, M);
}

LaurentSeries g2_tail_series(const Monomial& x, long long trunc, long long base) {
    const long long B = base;
    EulerianSum s;
    s.mon = [B](long long n) { return Monomial::q_power(B * n); };
    s.num = {{x.inverse().times(Monomial::q_power(B)), B, [](long long n) { return n; }},
             {x, B, [](long long n) { return n; }}};
    s.den = {{Monomial::neg_q_power(B), B, [](long long n) { return n; }}};
    s.prefactor = LaurentSeries(Rational(1, 2));
    return eulerian_series(s, trunc);
}

VerificationReport verify_g2_tail_hecke(const Monomial& x, long long trunc) {
    LaurentSeries lhs = build_to_order(trunc, [&](long long T) {
        LaurentSeries j2 = theta_shorthand(ThetaKind::Jm, 0, 2, T);
        return scalar_mul(2, mul(j2, g2_tail_series(x, T)));
    });
    LaurentSeries rhs = build_to_order(trunc, [&](long long T) {
        LaurentSeries h1 =
            f_abc(HeckeSpec(1, 3, 6, x.times(Monomial::q_power(1)), Monomial::q_power(5)), T);
        LaurentSeries h2 =
            f_abc(HeckeSpec(1, 3, 6, x.times(Monomial::q_power(2)), Monomial::q_power(7)), T);
        return add(h1, mul(h2, Monomial::q_power(1)));
    });
    return compare_series("hecke-f", "x=" + x.str(), lhs, rhs, trunc);
}

}  // namespace qmock
