#include "qmock/radial.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <boost/math/constants/constants.hpp>
#include <climits>
#include <sstream>

namespace qmock {

namespace {

// ---- magnitude / cancellation bookkeeping -------------------------------
//
// Near the unit circle both the theta sums and the Eulerian sums cancel
// catastrophically (J_1 at t = 1 - 2^-14 is around 2^-39000 while its
// summands are of size 1).  Every intermediate magnitude is tracked;
// radial_verify compares the peak against the magnitude of the final value
// and retries the sample with more working precision until the requested
// target precision survives the cancellation.

thread_local long long tl_peak = LLONG_MIN;
thread_local long long tl_cancel = 0;

long long mag2(const BigFloat& x) {
    if (mpfr_zero_p(x.backend().data()) || !mpfr_number_p(x.backend().data()))
        return LLONG_MIN;
    return static_cast<long long>(mpfr_get_exp(x.backend().data()));
}

long long mag2(const BigComplex& z) { return std::max(mag2(z.re), mag2(z.im)); }

template <class C>
void bump(const C& z) {
    tl_peak = std::max(tl_peak, mag2(z));
}

// Cancellation accounting.  Bits lost inside one sum are a *relative* error
// of its result; sibling factors in a product don't compound (relative errors
// add, so the max dominates), but a collapse in an enclosing sum amplifies
// whatever error its inputs already carry.  Hence: take the max over child
// scopes, then add the enclosing scope's own peak-vs-result loss on top.
struct CancelScope {
    long long outer_peak;
    long long outer_cancel;
    CancelScope() : outer_peak(tl_peak), outer_cancel(tl_cancel) {
        tl_peak = LLONG_MIN;
        tl_cancel = 0;
    }
    template <class C>
    void finish(const C& v) {
        long long vm = mag2(v);
        long long own = 0;
        if (tl_peak != LLONG_MIN && vm != LLONG_MIN && tl_peak > vm)
            own = tl_peak - vm;
        tl_cancel = std::max(outer_cancel, tl_cancel + own);
        tl_peak = std::max(outer_peak, vm);
    }
};

struct PrecGuard {
    unsigned saved;
    explicit PrecGuard(unsigned bits) : saved(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits(bits));
    }
    ~PrecGuard() { BigFloat::default_precision(saved); }
};

const BigComplex kOne{BigFloat(1), BigFloat(0)};

// The kernels below are templated over the scalar: BigComplex in general, but
// plain BigFloat when q (and every derived argument) is real, i.e. at roots
// of unity of order 1 or 2.  Those are exactly the expensive runs (smallest
// root order means the most cancellation), and real arithmetic is 4-6x
// cheaper per operation.
template <class C>
C c_one();
template <>
BigFloat c_one<BigFloat>() {
    return BigFloat(1);
}
template <>
BigComplex c_one<BigComplex>() {
    return kOne;
}

// Expression results inherit the *operand* precision with this backend, so an
// exact low-precision input would silently pin the whole computation at its
// precision.  Pad inputs up to the current working precision on entry.
BigFloat promote(BigFloat x) {
    unsigned d = BigFloat::default_precision();
    if (x.precision() < d) x.precision(d);
    return x;
}

BigComplex promote(BigComplex z) {
    z.re = promote(std::move(z.re));
    z.im = promote(std::move(z.im));
    return z;
}

template <class C>
C cpow(const C& b, long long e) {
    if (e < 0) return c_one<C>() / cpow(b, -e);
    C acc = c_one<C>();
    C base = b;
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u) {
        if (u & 1ull) acc *= base;
        base *= base;
        u >>= 1;
    }
    return acc;
}

// Accumulator with the streak stopping rule: once five consecutive terms sit
// wbits - 32 binary orders below the running peak they cannot move the sum.
template <class C>
class Accum {
public:
    Accum(unsigned wbits, long long cap, const char* what)
        : sum_(c_one<C>() - c_one<C>()), floor_gap_(static_cast<long long>(wbits) - 32),
          cap_(cap), what_(what) {}

    // returns true when the sum is saturated
    bool push(const C& term) {
        bump(term);
        long long m = mag2(term);
        peak_ = std::max(peak_, m);
        sum_ += term;
        ++count_;
        if (m < peak_ - floor_gap_)
            ++streak_;
        else
            streak_ = 0;
        if (streak_ >= 5) return true;
        if (count_ >= cap_)
            throw NoConvergenceBudget(std::string(what_) +
                                      ": term cap exceeded before saturation");
        return false;
    }

    const C& value() const { return sum_; }

private:
    C sum_;
    long long peak_ = LLONG_MIN;
    long long floor_gap_;
    long long cap_;
    long long count_ = 0;
    int streak_ = 0;
    const char* what_;
};

}  // namespace

// ---- bilateral theta sum ---------------------------------------------------

namespace {

template <class C>
C jtheta_t(const C& x_in, const C& q_in, unsigned precision_bits, long long term_cap) {
    PrecGuard pg(precision_bits);
    const C one = c_one<C>();
    const C x = promote(x_in);
    const C q = promote(q_in);
    CancelScope cs;
    Accum<C> acc(precision_bits, term_cap, "jtheta");
    // n >= 0: (-1)^n q^{n(n-1)/2} x^n; the exponent grows by n per step
    C term = one;
    C qn = one;  // q^n before the step to n+1
    bool done = acc.push(term);
    while (!done) {
        term = -term * qn * x;
        qn *= q;
        done = acc.push(term);
    }
    // n <= -1 with m = -n: (-1)^m q^{m(m+1)/2} x^{-m}; exponent grows by m+1
    C xinv = one / x;
    C qm = q;          // q^{m}
    term = -q * xinv;  // m = 1
    done = false;
    while (!done) {
        done = acc.push(term);
        qm *= q;
        term = -term * qm * xinv;
    }
    C v = acc.value();
    cs.finish(v);
    return v;
}

}  // namespace

BigComplex numeric_jtheta(const BigComplex& x_in, const BigComplex& q_in, unsigned precision_bits,
                          long long term_cap) {
    if (x_in.im.is_zero() && q_in.im.is_zero())
        return {jtheta_t<BigFloat>(x_in.re, q_in.re, precision_bits, term_cap), BigFloat(0)};
    return jtheta_t<BigComplex>(x_in, q_in, precision_bits, term_cap);
}

// ---- Appell-Lerch sum m(x,q,z) ----------------------------------------------

namespace {

template <class C>
C appell_t(const C& x_in, const C& q_in, const C& z_in, unsigned precision_bits,
           long long term_cap) {
    PrecGuard pg(precision_bits);
    const C one = c_one<C>();
    const C x = promote(x_in);
    const C q = promote(q_in);
    const C z = promote(z_in);
    CancelScope cs;
    C jz = jtheta_t<C>(z, q, precision_bits, term_cap);
    Accum<C> acc(precision_bits, term_cap, "appell");
    const C xz = x * z;
    // r >= 1: (-1)^r q^{r(r-1)/2} z^r / (1 - q^{r-1} x z); exponent grows by r
    C num = -z;    // r = 1
    C qr1 = one;   // q^{r-1}
    bool done = false;
    while (!done) {
        done = acc.push(num / (one - qr1 * xz));
        num = -num * qr1 * q * z;
        qr1 *= q;
    }
    // r <= 0 with s = -r: (-1)^s q^{s(s+1)/2} z^{-s} / (1 - q^{-s-1} x z)
    const C zinv = one / z;
    const C qinv = one / q;
    C snum = one;  // s = 0
    C qs1 = q;     // q^{s+1}
    C dq = qinv;   // q^{-s-1}
    done = false;
    while (!done) {
        done = acc.push(snum / (one - dq * xz));
        snum = -snum * qs1 * zinv;
        qs1 *= q;
        dq *= qinv;
    }
    C v = acc.value() / jz;
    cs.finish(v);
    return v;
}

}  // namespace

BigComplex numeric_appell(const BigComplex& x_in, const BigComplex& q_in, const BigComplex& z_in,
                          unsigned precision_bits, long long term_cap) {
    if (x_in.im.is_zero() && q_in.im.is_zero() && z_in.im.is_zero())
        return {appell_t<BigFloat>(x_in.re, q_in.re, z_in.re, precision_bits, term_cap),
                BigFloat(0)};
    return appell_t<BigComplex>(x_in, q_in, z_in, precision_bits, term_cap);
}

// ---- regularized bilateral for S4 --------------------------------------------

namespace {

template <class C>
C sumstar_t(const C& q_in, unsigned precision_bits, long long term_cap) {
    PrecGuard pg(precision_bits);
    const C one = c_one<C>();
    const C q = promote(q_in);
    CancelScope cs;
    C jneg1 = jtheta_t<C>(-one, q, precision_bits, term_cap);
    Accum<C> acc(precision_bits, term_cap, "sumstar");
    const BigFloat two(2);
    // n >= 0: 2 q^{n(n+1)/2} / (1+q^n)^2; exponent grows by n+1
    C e = one;
    C qn = one;
    bool done = false;
    while (!done) {
        C d = one + qn;
        done = acc.push(two * (e / (d * d)));
        qn *= q;
        e *= qn;
    }
    // n <= -1 with m = -n: 2 q^{m(m-1)/2 + 2m} / (1+q^m)^2; exponent grows by m+2
    C qm = q;
    e = q * q;  // m = 1
    done = false;
    while (!done) {
        C d = one + qm;
        done = acc.push(two * (e / (d * d)));
        e *= qm * q * q;
        qm *= q;
    }
    C v = acc.value() / jneg1;
    cs.finish(v);
    return v;
}

}  // namespace

BigComplex numeric_sumstar_s4(const BigComplex& q_in, unsigned precision_bits,
                              long long term_cap) {
    if (q_in.im.is_zero())
        return {sumstar_t<BigFloat>(q_in.re, precision_bits, term_cap), BigFloat(0)};
    return sumstar_t<BigComplex>(q_in, precision_bits, term_cap);
}

// ---- Eulerian series ----------------------------------------------------------

namespace {

BigComplex series_f3(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "f3");
    BigComplex qn = kOne;    // q^n
    BigComplex qsq = kOne;   // q^{n^2}
    BigComplex poch = kOne;  // (-q;q)_n
    bool done = acc.push(kOne);
    for (long long n = 1; !done; ++n) {
        qsq *= qn * qn * q;  // n^2 - (n-1)^2 = 2n - 1
        qn *= q;
        poch *= kOne + qn;
        done = acc.push(qsq / (poch * poch));
    }
    return acc.value();
}

BigComplex series_w3(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "w3");
    const BigComplex q2 = q * q;
    BigComplex e = kOne;        // q^{2n(n+1)}
    BigComplex qodd = q;        // q^{2n+1}
    BigComplex den = kOne - q;  // (q;q^2)_{n+1}
    BigComplex q4n4 = q2 * q2;  // q^{4(n+1)}
    bool done = false;
    for (long long n = 0; !done; ++n) {
        done = acc.push(e / (den * den));
        e *= q4n4;  // 2(n+1)(n+2) - 2n(n+1) = 4(n+1)
        q4n4 *= q2 * q2;
        qodd *= q2;
        den *= kOne - qodd;
    }
    return acc.value();
}

// S1(1;q) = 2 sum (-1)^n q^{(n+1)^2} (q;q^2)_n / (-q;q^2)_{n+1}^2
BigComplex series_s1(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "S1");
    const BigComplex q2 = q * q;
    const BigFloat two(2);
    BigComplex e = q;            // q^{(n+1)^2}
    BigComplex qodd = q;         // q^{2n+1}
    BigComplex num = kOne;       // (q;q^2)_n
    BigComplex den = kOne + q;   // (-q;q^2)_{n+1}
    BigComplex sign = kOne;
    bool done = false;
    for (long long n = 0; !done; ++n) {
        done = acc.push(two * sign * (e * num / (den * den)));
        sign = -sign;
        num *= kOne - qodd;
        e *= qodd * q2;  // (n+2)^2 - (n+1)^2 = 2n + 3
        qodd *= q2;
        den *= kOne + qodd;
    }
    return acc.value();
}

// S3(1;q) = sum (-1)^n q^{n^2} (q;q^2)_n / ((-1;q^2)_{n+1} (-q^2;q^2)_n)
BigComplex series_s3(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "S3");
    const BigComplex q2 = q * q;
    BigComplex e = kOne;              // q^{n^2}
    BigComplex qodd = q;              // q^{2n+1}
    BigComplex qeven = q2;            // q^{2n+2}
    BigComplex num = kOne;            // (q;q^2)_n
    BigComplex den1{BigFloat(2), BigFloat(0)};  // (-1;q^2)_{n+1}
    BigComplex den2 = kOne;           // (-q^2;q^2)_n
    BigComplex sign = kOne;
    bool done = false;
    for (long long n = 0; !done; ++n) {
        done = acc.push(sign * (e * num / (den1 * den2)));
        sign = -sign;
        num *= kOne - qodd;
        e *= qodd;  // (n+1)^2 - n^2 = 2n + 1
        qodd *= q2;
        den1 *= kOne + qeven;
        den2 *= kOne + qeven;
        qeven *= q2;
    }
    return acc.value();
}

// second Eulerian form: B2(q) = sum q^{n^2+n} (-q^2;q^2)_n / (q;q^2)_{n+1}^2
BigComplex series_b2(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "B2");
    const BigComplex q2 = q * q;
    BigComplex e = kOne;        // q^{n^2+n}
    BigComplex qodd = q;        // q^{2n+1}
    BigComplex qeven = q2;      // q^{2n+2}
    BigComplex num = kOne;      // (-q^2;q^2)_n
    BigComplex den = kOne - q;  // (q;q^2)_{n+1}
    bool done = false;
    for (long long n = 0; !done; ++n) {
        done = acc.push(e * num / (den * den));
        e *= qeven;  // (n+1)(n+2) - n(n+1) = 2n + 2
        num *= kOne + qeven;
        qeven *= q2;
        qodd *= q2;
        den *= kOne - qodd;
    }
    return acc.value();
}

// psi10(q) = sum q^{(n+1)(n+2)/2} / (q;q^2)_{n+1}
BigComplex series_psi10(const BigComplex& q, unsigned W, long long cap) {
    Accum acc(W, cap, "psi10");
    const BigComplex q2 = q * q;
    BigComplex e = q;           // q^{(n+1)(n+2)/2}
    BigComplex qstep = q * q;   // q^{n+2}
    BigComplex qodd = q;        // q^{2n+1}
    BigComplex den = kOne - q;  // (q;q^2)_{n+1}
    bool done = false;
    for (long long n = 0; !done; ++n) {
        done = acc.push(e / den);
        e *= qstep;
        qstep *= q;
        qodd *= q2;
        den *= kOne - qodd;
    }
    return acc.value();
}

}  // namespace

BigComplex eval_series_numeric(SeriesId id, const BigComplex& q_in, unsigned precision_bits,
                               long long term_cap) {
    PrecGuard pg(precision_bits);
    const BigComplex q = promote(q_in);
    CancelScope cs;
    BigComplex v;
    switch (id) {
        case SeriesId::f3: v = series_f3(q, precision_bits, term_cap); break;
        case SeriesId::w3: v = series_w3(q, precision_bits, term_cap); break;
        case SeriesId::S1: v = series_s1(q, precision_bits, term_cap); break;
        case SeriesId::S2:
            v = -numeric_appell(kOne, q * q, q, precision_bits, term_cap);
            break;
        case SeriesId::S3: v = series_s3(q, precision_bits, term_cap); break;
        case SeriesId::S4: v = numeric_sumstar_s4(q, precision_bits, term_cap); break;
        case SeriesId::B2:
        case SeriesId::B2_alt: v = series_b2(q, precision_bits, term_cap); break;
        case SeriesId::psi10: v = series_psi10(q, precision_bits, term_cap); break;
        default:
            throw UnknownId("no numeric evaluator for series " +
                            std::string(series_name(id)) + " (S-series are at omega=1)");
    }
    cs.finish(v);
    return v;
}

// ---- left-hand sides ------------------------------------------------------------

BigComplex radial_lhs(RadialTheorem t, long long k, const BigComplex& q_in,
                      unsigned precision_bits, long long term_cap) {
    PrecGuard pg(precision_bits);
    const BigComplex q = promote(q_in);
    const unsigned W = precision_bits;
    auto J = [&](long long a, long long m) {
        BigComplex v = numeric_jtheta(cpow(q, a), cpow(q, m), W, term_cap);
        bump(v);
        return v;
    };
    auto Jb = [&](long long a, long long m) {
        BigComplex v = numeric_jtheta(-cpow(q, a), cpow(q, m), W, term_cap);
        bump(v);
        return v;
    };
    auto Jm = [&](long long m) { return J(m, 3 * m); };
    auto S = [&](SeriesId id) { return eval_series_numeric(id, q, W, term_cap); };
    const BigFloat half(0.5), two(2), quarter(0.25);

    // each additive piece is bumped so the assembly-level cancellation
    // (huge series vs huge theta quotient collapsing to a small limit)
    // shows up in tl_cancel
    auto piece = [&](BigComplex w) {
        bump(w);
        return w;
    };

    CancelScope cs;
    BigComplex v;
    switch (t) {
        case RadialTheorem::FOR: {
            BigComplex j12 = J(1, 2);
            BigComplex b = piece(j12 * j12 / Jm(1));
            v = piece(S(SeriesId::f3)) - ((k % 2 == 0) ? b : -b);
            break;
        }
        case RadialTheorem::W3: {
            BigComplex j14 = Jb(1, 4);
            v = piece(q * S(SeriesId::w3)) -
                piece(j14 * j14 * Jb(2, 4) / (Jb(0, 4) * Jm(2)));
            break;
        }
        case RadialTheorem::EX1: {
            BigComplex j12 = J(1, 2);
            v = piece(S(SeriesId::S1)) + piece(j12 * j12 / Jb(0, 1));
            break;
        }
        case RadialTheorem::EX2: {
            BigComplex jb12 = Jb(1, 2);
            BigComplex j14 = J(1, 4);
            v = piece(two * S(SeriesId::S2)) -
                piece(half * (jb12 * jb12 * jb12 / (j14 * j14)));
            break;
        }
        case RadialTheorem::EX3: {
            BigComplex j12 = J(1, 2);
            v = piece(S(SeriesId::S3)) - piece(j12 * j12 / Jb(0, 1));
            break;
        }
        case RadialTheorem::EX4: {
            BigComplex j1 = Jm(1);
            BigComplex jb01 = Jb(0, 1);
            BigComplex jb12 = Jb(1, 2);
            v = piece(S(SeriesId::S4)) + piece(j1 * j1 * j1 / (jb01 * jb01)) -
                piece(half * (cpow(jb12, 4) / (j1 * j1 * j1)));
            break;
        }
        case RadialTheorem::B2: {
            BigComplex j1 = Jm(1), j2 = Jm(2), j4 = Jm(4), j8 = Jm(8);
            BigComplex qinv = kOne / q;
            v = piece(S(SeriesId::B2)) - piece(cpow(j4, 5) / cpow(j2, 4)) -
                piece(quarter * qinv * (cpow(j4, 17) / (cpow(j2, 8) * cpow(j8, 8)))) +
                piece(quarter * qinv * (j4 * cpow(j1, 4) / (j2 * j2 * j8 * j8)));
            break;
        }
        case RadialTheorem::PSI10: {
            BigComplex j5 = Jm(5), j10 = Jm(10), j20 = Jm(20);
            BigComplex jb15 = Jb(1, 5), jb710 = Jb(7, 10);
            BigComplex j210 = J(2, 10);
            v = piece(S(SeriesId::psi10)) +
                piece(q * j10 * j10 * jb15 / (j5 * J(4, 10))) -
                piece(two * q * cpow(j10, 4) / (j5 * j5 * j210)) -
                piece(cpow(j10, 10) * Jb(2, 10) /
                      (cpow(j5, 4) * cpow(j20, 4) * j210 * jb710)) +
                piece(cpow(J(10, 20), 2) * J(1, 5) / (jb15 * jb710));
            break;
        }
    }
    cs.finish(v);
    return v;
}

// ---- radial extrapolation -----------------------------------------------------

RadialResult radial_verify(RadialTheorem t, long long k, long long ell, long long root_index,
                           const RadialOptions& opt) {
    RadialResult res;
    res.theorem = t;
    res.k = k;
    res.ell = ell;
    res.root_order = radial_root_order(t, k, ell);
    res.root_index = root_index;
    res.precision_bits = opt.precision_bits;
    const long long N = res.root_order;
    if (std::gcd(root_index % N + N, N) != 1)
        throw InadmissibleOrder("root index not coprime to the root order");

    std::vector<int> schedule = opt.schedule;
    if (schedule.empty())
        for (int i = 4; i <= 14; ++i) schedule.push_back(i);

    const unsigned pb = opt.precision_bits;
    long long hint = 0;  // cancellation measured at the previous step
    for (int step : schedule) {
        // seed the working precision with the expected theta cancellation
        // (a few bits per unit of 1/(1-t), tempered by the root order); once a
        // step has run, its measured cancellation roughly doubles per step and
        // seeds the next one directly, skipping the escalation ladder
        long long seed = pb + 96 +
                         std::min<long long>((3ll << step) / std::max<long long>(1, N * N),
                                             200000);
        seed = std::max(seed, hint);
        unsigned W = static_cast<unsigned>(seed);
        BigComplex value;
        for (;;) {
            PrecGuard pg(W);
            tl_peak = LLONG_MIN;
            tl_cancel = 0;
            BigFloat tt = BigFloat(1) - ldexp(BigFloat(1), -step);
            BigFloat theta = 2 * boost::math::constants::pi<BigFloat>() *
                             BigFloat(root_index) / BigFloat(N);
            BigComplex q{tt * cos(theta), tt * sin(theta)};
            value = radial_lhs(t, k, q, W, opt.term_cap);
            long long needed = tl_cancel + pb + 64;
            if (std::getenv("QMOCK_RADIAL_TRACE"))
                std::fprintf(stderr, "trace step=%d W=%u peak=%lld cancel=%lld |v|~2^%lld\n",
                             step, W, tl_peak, tl_cancel, mag2(value));
            if (static_cast<long long>(W) >= needed) {
                hint = 2 * tl_cancel + pb + 128;
                break;
            }
            W = static_cast<unsigned>(std::max<long long>(needed + 64, 2ll * W));
        }
        res.samples.push_back({step, value});
    }

    // Neville extrapolation at h = 1 - t = 2^{-step}, polynomial order <= 6
    {
        PrecGuard pg(pb + 96);
        size_t m = std::min<size_t>(7, res.samples.size());
        size_t off = res.samples.size() - m;
        std::vector<BigFloat> h(m);
        std::vector<BigComplex> p(m);
        for (size_t i = 0; i < m; ++i) {
            h[i] = ldexp(BigFloat(1), -res.samples[off + i].step);
            p[i] = res.samples[off + i].value;
        }
        BigComplex prev = p[0];
        for (size_t j = 1; j < m; ++j) {
            for (size_t i = 0; i + j < m; ++i) {
                BigFloat denom = h[i + j] - h[i];
                p[i] = BigComplex{(h[i + j] * p[i].re - h[i] * p[i + 1].re) / denom,
                                  (h[i + j] * p[i].im - h[i] * p[i + 1].im) / denom};
            }
            if (j == m - 2) prev = p[0];
        }
        res.limit = p[0];
        res.error_estimate = (p[0] - prev).abs();

        res.exact_rhs = embed_numeric(rhs_finite_sum(t, k, ell, opt.f3), root_index, pb);
        res.difference = (res.limit - res.exact_rhs).abs();
        res.pass = res.difference <= BigFloat(opt.tolerance);
        if (t == RadialTheorem::PSI10 && ell == 3)
            res.notes = opt.f3 == F3Variant::paper ? "F(3) variant: paper"
                                                   : "F(3) variant: corrected";
    }
    return res;
}

std::string radial_result_json(const RadialResult& r) {
    nlohmann::json j;
    j["theorem"] = radial_theorem_name(r.theorem);
    j["k"] = r.k;
    if (r.theorem == RadialTheorem::PSI10) j["ell"] = r.ell;
    j["root_order"] = r.root_order;
    j["root_index"] = r.root_index;
    j["precision_bits"] = r.precision_bits;
    auto cstr = [](const BigComplex& z) {
        return nlohmann::json{{"re", z.re.str(30)}, {"im", z.im.str(30)}};
    };
    nlohmann::json samples = nlohmann::json::array();
    for (const RadialSample& s : r.samples) {
        nlohmann::json e = cstr(s.value);
        e["step"] = s.step;
        samples.push_back(e);
    }
    j["schedule"] = samples;
    j["limit"] = cstr(r.limit);
    j["error_estimate"] = r.error_estimate.str(10);
    j["exact_rhs"] = cstr(r.exact_rhs);
    j["difference"] = r.difference.str(10);
    j["pass"] = r.pass;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

}  // namespace qmock
