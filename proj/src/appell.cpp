#include "qmock/appell.hpp"

#include <sstream>

#include "qmock/eulerian.hpp"
#include "qmock/theta.hpp"
#include "qmock/verify_util.hpp"

namespace qmock {

namespace {

long long binom2(long long r) { return r * (r - 1) / 2; }

Monomial q_pow(long long e) { return Monomial::q_power(e); }

// J_{a,m} and friends at a given working order
LaurentSeries Jam(long long a, long long m, long long T) {
    return jtheta_general(q_pow(a), m, T);
}
LaurentSeries Jbar_am(long long a, long long m, long long T) {
    return jtheta_general(Monomial::neg_q_power(a), m, T);
}
LaurentSeries Jsub(long long m, long long T) { return Jam(m, 3 * m, T); }

LaurentSeries div_at(const LaurentSeries& a, const LaurentSeries& b, long long T) {
    return mul(a, invert_to(b, T));
}

}  // namespace

AppellSpec::AppellSpec(Monomial x_, Monomial z_, long long M)
    : x(std::move(x_)), z(std::move(z_)), base(M) {
    if (base < 1) throw QmockError("AppellSpec: base must be >= 1");
}

std::string AppellSpec::str() const {
    std::ostringstream os;
    os << "m(" << x.str() << ", q^" << base << ", " << z.str() << ")";
    return os.str();
}

bool AppellSpec::has_pole() const {
    return x.sign * z.sign == +1 && x.scalar * z.scalar == 1 &&
           (x.exponent + z.exponent) % base == 0;
}

LaurentSeries m_series(const AppellSpec& spec, long long trunc) {
    if (jtheta_vanishes(spec.z, spec.base))
        throw ThetaDenominatorZero("m_series: j(" + spec.z.str() + ";q^" +
                                   std::to_string(spec.base) + ") is identically zero in " +
                                   spec.str());
    if (spec.has_pole())
        throw PoleAtSummand("m_series: a summand denominator vanishes identically in " +
                            spec.str());
    const long long M = spec.base;
    return build_to_order(trunc, [&](long long T) {
        // bilateral sum, geometric expansion of each 1 - q^{M(r-1)} x z
        LaurentSeries s = LaurentSeries::zero(T);
        for (long long dir : {+1ll, -1ll}) {
            long long streak = 0;
            for (long long r = dir > 0 ? 0 : -1;; r += dir) {
                Monomial numer = spec.z.power(r).times(q_pow(M * binom2(r)));
                if (r % 2 != 0) numer = numer.negate();
                Monomial u(spec.x.sign * spec.z.sign, spec.x.scalar * spec.z.scalar,
                           M * (r - 1) + spec.x.exponent + spec.z.exponent);
                long long val = numer.exponent + std::max(0ll, -u.exponent);
                if (val < T) {
                    streak = 0;
                    s = add(s, truncated(mul(geom_inverse(u, T - numer.exponent), numer), T));
                } else {
                    ++streak;
                    if (streak >= 3 && std::abs(r) >= 4) break;
                }
            }
        }
        LaurentSeries jz = jtheta_general(spec.z, M, T);
        long long vj = jz.valuation().value_or(0);
        if (vj > 0) jz = jtheta_general(spec.z, M, T + 2 * vj + 2);
        return mul(s, invert_to(jz, T));
    });
}

LaurentSeries sumstar_series(const Monomial& x, long long trunc, long long base) {
    const long long B = base;
    if (x.sign == -1 && x.scalar == 1 && x.exponent % B == 0)
        throw PoleAtSummand("sumstar_series: 1 + x q^n vanishes identically at x = " +
                            x.str());
    return build_to_order(trunc, [&](long long T) {
        LaurentSeries s = LaurentSeries::zero(T);
        for (long long dir : {+1ll, -1ll}) {
            long long streak = 0;
            for (long long n = dir > 0 ? 0 : -1;; n += dir) {
                Monomial numer = q_pow(B * (n * (n + 1) / 2));
                // 1/(1 + v) = 1/(1 - (-v))
                Monomial v1(-x.sign, x.scalar, x.exponent + B * n);      // -x q^n
                Monomial v2(-x.sign, Rational(1) / x.scalar, B * n - x.exponent);
                long long val = numer.exponent + std::max(0ll, -v1.exponent) +
                                std::max(0ll, -v2.exponent);
                if (val < T) {
                    streak = 0;
                    LaurentSeries term = mul(geom_inverse(v1, T - numer.exponent +
                                                                   std::max(0ll, -v2.exponent)),
                                             geom_inverse(v2, T - numer.exponent +
                                                                   std::max(0ll, -v1.exponent)));
                    s = add(s, truncated(mul(term, numer), T));
                } else {
                    ++streak;
                    if (streak >= 3 && std::abs(n) >= 4) break;
                }
            }
        }
        LaurentSeries pref = add(LaurentSeries(Rational(1)),
                                 LaurentSeries::from_monomial(x.inverse()));
        s = mul(pref, s);
        return mul(s, invert_to(Jbar_am(0, B, T), T));
    });
}

const char* functional_eq_name(FunctionalEq id) {
    switch (id) {
        case FunctionalEq::ZShift: return "z-shift";
        case FunctionalEq::XInverse: return "x-inverse";
        case FunctionalEq::XShift: return "x-shift";
        case FunctionalEq::ChangeZ: return "change-z";
        case FunctionalEq::ZFlip: return "z-flip";
    }
    return "?";
}

VerificationReport verify_functional_equation(FunctionalEq id, const Monomial& x,
                                              const Monomial& z,
                                              std::optional<Monomial> z1, long long M,
                                              long long trunc) {
    std::ostringstream spec;
    spec << "x=" << x.str() << ", z=" << z.str();
    if (z1) spec << ", z1=" << z1->str();
    spec << ", base=" << M;

    auto m_of = [&](const Monomial& xx, const Monomial& zz, long long T) {
        return m_series(AppellSpec(xx, zz, M), T);
    };

    LaurentSeries lhs, rhs;
    switch (id) {
        case FunctionalEq::ZShift:
            lhs = m_of(x, z, trunc);
            rhs = m_of(x, z.times(q_pow(M)), trunc);
            break;
        case FunctionalEq::XInverse:
            lhs = m_of(x, z, trunc);
            rhs = build_to_order(trunc, [&](long long T) {
                return mul(m_of(x.inverse(), z.inverse(), T), x.inverse());
            });
            break;
        case FunctionalEq::XShift:
            lhs = m_of(x.times(q_pow(M)), z, trunc);
            rhs = build_to_order(trunc, [&](long long T) {
                return sub(LaurentSeries(Rational(1)), mul(m_of(x, z, T), x));
            });
            break;
        case FunctionalEq::ChangeZ: {
            if (!z1) throw QmockError("change-z requires z1");
            const Monomial z0 = z;
            lhs = build_to_order(trunc, [&](long long T) {
                return sub(m_of(x, *z1, T), m_of(x, z0, T));
            });
            rhs = build_to_order(trunc, [&](long long T) {
                for (const Monomial& arg :
                     {z0, *z1, x.times(z0), x.times(*z1)})
                    if (jtheta_vanishes(arg, M))
                        throw NonGenericSpecialization("change-z: j(" + arg.str() + ";q^" +
                                                       std::to_string(M) + ") vanishes");
                LaurentSeries numer = mul(pow_nonneg(Jsub(M, T), 3, T),
                                          jtheta_general(z1->times(z0.inverse()), M, T));
                numer = mul(numer, jtheta_general(x.times(z0).times(*z1), M, T));
                numer = mul(numer, z0);
                LaurentSeries den = mul(jtheta_general(z0, M, T), jtheta_general(*z1, M, T));
                den = mul(den, jtheta_general(x.times(z0), M, T));
                den = mul(den, jtheta_general(x.times(*z1), M, T));
                return div_at(numer, den, T);
            });
            break;
        }
        case FunctionalEq::ZFlip:
            lhs = m_of(x, z, trunc);
            rhs = m_of(x, x.times(z).inverse(), trunc);
            break;
    }
    return compare_series(functional_eq_name(id), spec.str(), lhs, rhs, trunc);
}

const char* eulerian_id_name(EulerianId id) {
    switch (id) {
        case EulerianId::RLN1: return "RLN1";
        case EulerianId::RLN2a: return "RLN2a";
        case EulerianId::RLN2b: return "RLN2b";
        case EulerianId::RLN2c: return "RLN2c";
        case EulerianId::RLN3: return "RLN3";
        case EulerianId::RLN4: return "RLN4";
        case EulerianId::RLN5: return "RLN5";
    }
    return "?";
}

namespace {

// Eulerian left-hand sides of the RLN identities, with q -> q^B throughout.
LaurentSeries rln_lhs(EulerianId id, const Monomial& x, long long B, long long T) {
    EulerianSum s;
    auto cn = [](long long) { return 0ll; };
    (void)cn;
    Monomial xn = x;  // already substituted by the caller
    switch (id) {
        case EulerianId::RLN1:
            s.mon = [B](long long n) { return q_pow(B * (n + 1)); };
            s.num = {{Monomial::neg_q_power(B), B, [](long long n) { return 2 * n; }}};
            s.den = {{xn.times(q_pow(B)), 2 * B, [](long long n) { return n + 1; }},
                     {xn.inverse().times(q_pow(B)), 2 * B, [](long long n) { return n + 1; }}};
            s.prefactor = add(LaurentSeries(Rational(1)),
                              LaurentSeries::from_monomial(xn.inverse()));
            break;
        case EulerianId::RLN2a:
        case EulerianId::RLN2b:
        case EulerianId::RLN2c:
            s.mon = [B](long long n) {
                Monomial m = q_pow(B * n * n);
                return n % 2 ? m.negate() : m;
            };
            s.num = {{q_pow(B), 2 * B, [](long long n) { return n; }}};
            s.den = {{xn.negate(), 2 * B, [](long long n) { return n + 1; }},
                     {xn.inverse().negate().times(q_pow(2 * B)), 2 * B,
                      [](long long n) { return n; }}};
            break;
        case EulerianId::RLN3:
            return sumstar_series(xn, T, B);
        case EulerianId::RLN4:
            s.mon = [B](long long n) {
                Monomial m = q_pow(B * (n + 1) * (n + 1));
                return n % 2 ? m.negate() : m;
            };
            s.num = {{q_pow(B), 2 * B, [](long long n) { return n; }}};
            s.den = {{xn.negate().times(q_pow(B)), 2 * B, [](long long n) { return n + 1; }},
                     {xn.inverse().negate().times(q_pow(B)), 2 * B,
                      [](long long n) { return n + 1; }}};
            s.prefactor = add(LaurentSeries(Rational(1)),
                              LaurentSeries::from_monomial(xn.inverse()));
            break;
        case EulerianId::RLN5:
            s.mon = [B](long long n) {
                Monomial m = q_pow(2 * B * n * n);
                return n % 2 ? m.negate() : m;
            };
            s.num = {{q_pow(2 * B), 4 * B, [](long long n) { return n; }}};
            s.den = {{xn.negate(), 4 * B, [](long long n) { return n + 1; }},
                     {xn.inverse().negate().times(q_pow(4 * B)), 4 * B,
                      [](long long n) { return n; }}};
            break;
    }
    return eulerian_series(s, T);
}

}  // namespace

VerificationReport verify_eulerian_identity(EulerianId id, const Monomial& x,
                                            long long trunc, long long base_substitution) {
    long long B = base_substitution;
    std::string notes;
    if (id == EulerianId::RLN2b && B % 2 != 0) {
        B *= 2;  // sqrt(-q/x) must land on integral exponents
        notes = "checked under the base substitution q -> q^2";
    }
    const Monomial xb = x.substituted(B);
    std::ostringstream spec;
    spec << "x=" << x.str() << ", base substitution M=" << B;

    LaurentSeries lhs =
        build_to_order(trunc, [&](long long T) { return rln_lhs(id, xb, B, T); });

    auto m_of = [&](Monomial xx, Monomial zz, long long M, long long T) {
        return m_series(AppellSpec(std::move(xx), std::move(zz), M), T);
    };
    auto theta_half_correction = [&](long long T, int sgn) {
        // +- J_{1,2}^2 / (2 j(-x;q)), scaled by B
        if (jtheta_vanishes(xb.negate(), B))
            throw NonGenericSpecialization("j(-x;q) vanishes at x = " + x.str());
        LaurentSeries c = div_at(pow_nonneg(Jam(B, 2 * B, T), 2, T),
                                 jtheta_general(xb.negate(), B, T), T);
        c = scalar_mul(Rational(1, 2), c);
        return sgn > 0 ? c : negate(c);
    };

    LaurentSeries rhs;
    switch (id) {
        case EulerianId::RLN1:
            rhs = build_to_order(trunc, [&](long long T) {
                return negate(m_of(xb, q_pow(B), 2 * B, T));
            });
            break;
        case EulerianId::RLN2a:
            rhs = build_to_order(trunc, [&](long long T) {
                return add(m_of(xb, Monomial::minus_one(), B, T), theta_half_correction(T, +1));
            });
            break;
        case EulerianId::RLN2b: {
            // -q/x must be the square of a monomial: x = -c^2 q^a, and the
            // doubled base keeps the exponent of the square root integral
            if (xb.sign != -1)
                throw NonGenericSpecialization(
                    "RLN2b: sqrt(-q/x) is only a monomial for x of sign -1");
            const Rational inv_c = Rational(1) / xb.scalar;
            const auto n_root = boost::multiprecision::sqrt(numerator(inv_c));
            const auto d_root = boost::multiprecision::sqrt(denominator(inv_c));
            if (n_root * n_root != numerator(inv_c) || d_root * d_root != denominator(inv_c))
                throw NonGenericSpecialization("RLN2b: 1/scalar(x) is not a rational square");
            const Rational root_scalar = Rational(n_root) / Rational(d_root);
            long long w = (B - xb.exponent) / 2;
            if ((B - xb.exponent) % 2 != 0)
                throw NonGenericSpecialization("RLN2b: sqrt exponent parity failure");
            VerificationReport last;
            for (int sigma : {+1, -1}) {
                Monomial zr(sigma, root_scalar, w);
                if (jtheta_vanishes(zr, B)) continue;
                if (AppellSpec(xb, zr, B).has_pole()) continue;
                LaurentSeries r = build_to_order(trunc, [&](long long T) {
                    return sub(scalar_mul(2, m_of(xb, Monomial::minus_one(), B, T)),
                               m_of(xb, zr, B, T));
                });
                std::string n2 = notes.empty() ? "" : notes + "; ";
                last = compare_series(eulerian_id_name(id), spec.str(), lhs, r, trunc,
                                      n2 + "sqrt branch z = " + zr.str());
                if (last.pass) return last;
            }
            if (last.id.empty())
                throw NonGenericSpecialization("RLN2b: no admissible sqrt branch for x = " +
                                               x.str());
            return last;
        }
        case EulerianId::RLN2c:
            rhs = build_to_order(trunc, [&](long long T) {
                Monomial x1(-1, xb.scalar * xb.scalar, B + 2 * xb.exponent);   // -q x^2
                Monomial x2(-1, xb.scalar * xb.scalar, 2 * xb.exponent - B);   // -x^2/q
                LaurentSeries m1 = m_of(x1, Monomial(-1, 1, -B), 4 * B, T);
                LaurentSeries m2 = m_of(x2, Monomial(-1, 1, B), 4 * B, T);
                return sub(m1, mul(m2, Monomial(xb.sign, xb.scalar, xb.exponent - B)));
            });
            break;
        case EulerianId::RLN3:
            rhs = build_to_order(trunc, [&](long long T) {
                return m_of(xb, Monomial::minus_one(), B, T);
            });
            break;
        case EulerianId::RLN4:
            rhs = build_to_order(trunc, [&](long long T) {
                return add(m_of(xb, Monomial::minus_one(), B, T), theta_half_correction(T, -1));
            });
            break;
        case EulerianId::RLN5:
            rhs = build_to_order(trunc, [&](long long T) {
                for (const Monomial& arg : {xb.negate()})
                    if (jtheta_vanishes(arg, 4 * B))
                        throw NonGenericSpecialization("RLN5: j(-x;q^4) vanishes at x = " +
                                                       x.str());
                if (jtheta_vanishes(xb.times(q_pow(B)), 2 * B))
                    throw NonGenericSpecialization("RLN5: j(xq;q^2) vanishes at x = " +
                                                   x.str());
                LaurentSeries corr =
                    mul(pow_nonneg(Jbar_am(B, 4 * B, T), 2, T),
                        jtheta_general(Monomial(-xb.sign, xb.scalar, xb.exponent + 2 * B),
                                       4 * B, T));
                LaurentSeries den = mul(jtheta_general(xb.negate(), 4 * B, T),
                                        jtheta_general(xb.times(q_pow(B)), 2 * B, T));
                return add(m_of(xb, q_pow(B), 2 * B, T), div_at(corr, den, T));
            });
            break;
        default:
            throw QmockError("verify_eulerian_identity: unhandled id");
    }
    return compare_series(eulerian_id_name(id), spec.str(), lhs, rhs, trunc, notes);
}

VerificationReport verify_bilateral_347(const Monomial& a, const Monomial& b,
                                        long long trunc, long long base) {
    const long long B = base;
    std::ostringstream spec;
    spec << "a=" << a.str() << ", b=" << b.str() << ", base=" << B;

    LaurentSeries lhs = build_to_order(trunc, [&](long long T) {
        EulerianSum s1;
        s1.mon = [&](long long n) {
            return a.inverse().power(n + 1).times(b.inverse().power(n)).times(
                q_pow(B * n * n));
        };
        s1.den = {{a.inverse().negate(), B, [](long long n) { return n + 1; }},
                  {Monomial(-b.sign, Rational(1) / b.scalar, B - b.exponent), B,
                   [](long long n) { return n; }}};
        EulerianSum s2;
        s2.n0 = 1;
        s2.mon = [&](long long n) { return q_pow(B * n); };
        s2.num = {{Monomial(-a.sign, a.scalar, B + a.exponent), B,
                   [](long long n) { return n - 1; }},
                  {b.negate(), B, [](long long n) { return n; }}};
        return add(eulerian_series(s1, T), eulerian_series(s2, T));
    });

    LaurentSeries rhs = build_to_order(trunc, [&](long long T) {
        if (jtheta_vanishes(b.negate(), B))
            throw NonGenericSpecialization("bilateral-347: j(-b;q) vanishes at b = " +
                                           b.str());
        LaurentSeries numer = pochhammer_infinite(Monomial(-a.sign, a.scalar, B + a.exponent),
                                                  B, T);
        LaurentSeries den = mul(pochhammer_infinite(q_pow(B), B, T),
                                pochhammer_infinite(Monomial(-b.sign, Rational(1) / b.scalar,
                                                             B - b.exponent),
                                                    B, T));
        den = mul(den, b);
        LaurentSeries r = div_at(numer, den, T);
        r = mul(r, jtheta_general(b.negate(), B, T));
        return mul(r, m_series(AppellSpec(a.times(b.inverse()), b.negate(), B), T));
    });

    return compare_series("bilateral-347", spec.str(), lhs, rhs, trunc);
}

}  // namespace qmock
