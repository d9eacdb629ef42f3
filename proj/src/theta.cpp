#include "qmock/theta.hpp"

#include <sstream>

namespace qmock {

ThetaSpec::ThetaSpec(Monomial arg, long long M) : x(std::move(arg)), base(M) {
    if (base < 1) throw QmockError("ThetaSpec: base must be >= 1");
    if (x.scalar != 1)
        throw QmockError("ThetaSpec: theta arguments must be +-q^a (unit scalar), got " +
                         x.str());
}

std::string ThetaSpec::str() const {
    std::ostringstream os;
    os << "j(" << x.str() << ";q^" << base << ")";
    return os.str();
}

bool jtheta_vanishes(const Monomial& x, long long M) {
    return x.sign == +1 && x.scalar == 1 && x.exponent % M == 0;
}

bool is_lattice_zero(const ThetaSpec& spec) {
    return jtheta_vanishes(spec.x, spec.base);
}

LaurentSeries jtheta_general(const Monomial& x, long long M, long long trunc) {
    if (jtheta_vanishes(x, M)) return LaurentSeries::zero(trunc);
    Monomial q_over_x(x.sign, Rational(1) / x.scalar, M - x.exponent);
    // negative-exponent factors lower the product valuation; retry with slack
    return build_to_order(trunc, [&](long long T) {
        LaurentSeries r = mul(pochhammer_infinite(x, M, T),
                              pochhammer_infinite(q_over_x, M, T));
        return mul(r, pochhammer_infinite(Monomial::q_power(M), M, T));
    });
}

LaurentSeries jtheta_product(const ThetaSpec& spec, long long trunc) {
    return jtheta_general(spec.x, spec.base, trunc);
}

LaurentSeries jtheta_sum(const ThetaSpec& spec, long long trunc) {
    const long long M = spec.base;
    const long long a = spec.x.exponent;
    auto exponent = [&](long long n) { return M * (n * (n - 1) / 2) + a * n; };
    auto term_scalar = [&](long long n) {
        Rational c = rational_pow(spec.x.scalar, n);
        bool neg = (n % 2 != 0);                       // (-1)^n
        if (spec.x.sign < 0 && (n % 2 != 0)) neg = !neg;  // sign^n
        return neg ? Rational(-c) : c;
    };
    LaurentSeries s = LaurentSeries::zero(trunc);
    for (long long dir : {+1ll, -1ll}) {
        long long n = dir > 0 ? 0 : -1;
        while (true) {
            long long e = exponent(n);
            if (e < trunc) {
                s = add(s, LaurentSeries(e, {term_scalar(n)}, LaurentSeries::kInfiniteOrder));
            } else {
                // quadratic in n: past the vertex the exponent only grows
                double vertex = 0.5 - static_cast<double>(a) / static_cast<double>(M);
                if ((dir > 0 && n > vertex + 1) || (dir < 0 && n < vertex - 1)) break;
            }
            n += dir;
        }
    }
    return truncated(s, trunc);
}

LaurentSeries theta_shorthand(ThetaKind kind, long long a, long long m, long long trunc) {
    if (m < 1) throw QmockError("theta_shorthand: m must be >= 1");
    switch (kind) {
        case ThetaKind::J:
            return jtheta_product(ThetaSpec(Monomial::q_power(a), m), trunc);
        case ThetaKind::Jbar:
            return jtheta_product(ThetaSpec(Monomial::neg_q_power(a), m), trunc);
        case ThetaKind::Jm:
            return jtheta_product(ThetaSpec(Monomial::q_power(m), 3 * m), trunc);
    }
    throw QmockError("theta_shorthand: bad kind");
}

}  // namespace qmock
