#include "qmock/series.hpp"

#include <algorithm>
#include <sstream>

namespace qmock {

namespace {

constexpr long long kMaxWindow = 4'000'000;  // coefficient-count guard

long long sat_add(long long a, long long b) {
    if (a >= LaurentSeries::kInfiniteOrder || b >= LaurentSeries::kInfiniteOrder)
        return LaurentSeries::kInfiniteOrder;
    long long s = a + b;
    if (s >= LaurentSeries::kInfiniteOrder) return LaurentSeries::kInfiniteOrder;
    return s;
}

void check_window(long long len, const char* where) {
    if (len < 0 || len > kMaxWindow)
        throw OrderOverflow(std::string(where) + ": window of " + std::to_string(len) +
                            " coefficients exceeds the supported range");
}

const Rational kZero(0);

}  // namespace

Monomial::Monomial(int s, Rational c, long long e) : sign(s), scalar(std::move(c)), exponent(e) {
    if (sign != 1 && sign != -1) throw QmockError("Monomial: sign must be +1 or -1");
    if (scalar == 0) throw QmockError("Monomial: zero scalar");
    if (scalar < 0) {
        scalar = -scalar;
        sign = -sign;
    }
}

Monomial Monomial::inverse() const {
    return Monomial(sign, Rational(1) / scalar, -exponent);
}

Monomial Monomial::times(const Monomial& o) const {
    return Monomial(sign * o.sign, scalar * o.scalar, exponent + o.exponent);
}

Monomial Monomial::power(long long k) const {
    int s = (k % 2 == 0) ? +1 : sign;
    return Monomial(s, rational_pow(scalar, k), exponent * k);
}

std::string Monomial::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (scalar != 1 || exponent == 0) os << scalar;
    if (exponent != 0) {
        if (scalar != 1) os << "*";
        os << "q^" << exponent;
    }
    return os.str();
}

LaurentSeries::LaurentSeries(const Rational& constant) {
    if (constant != 0) {
        min_exp_ = 0;
        coef_ = {constant};
    }
}

LaurentSeries::LaurentSeries(long long min_exp, std::vector<Rational> coef, long long valid_order)
    : min_exp_(min_exp), coef_(std::move(coef)), valid_order_(valid_order) {
    normalize();
}

LaurentSeries LaurentSeries::zero(long long valid_order) {
    LaurentSeries s;
    s.valid_order_ = valid_order;
    return s;
}

LaurentSeries LaurentSeries::from_monomial(const Monomial& m) {
    return LaurentSeries(m.exponent, {m.signed_scalar()});
}

void LaurentSeries::normalize() {
    check_window(static_cast<long long>(coef_.size()), "LaurentSeries");
    // never keep storage at or beyond the validity bound
    if (valid_order_ < stored_end()) {
        long long keep = valid_order_ - min_exp_;
        coef_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    size_t lead = 0;
    while (lead < coef_.size() && coef_[lead] == 0) ++lead;
    if (lead == coef_.size()) {
        coef_.clear();
        min_exp_ = 0;
        return;
    }
    size_t tail = coef_.size();
    while (tail > lead && coef_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coef_.size()) {
        coef_ = std::vector<Rational>(coef_.begin() + lead, coef_.begin() + tail);
        min_exp_ += static_cast<long long>(lead);
    }
}

const Rational& LaurentSeries::coefficient(long long e) const {
    if (e >= valid_order_)
        throw BeyondTruncation("coefficient of q^" + std::to_string(e) +
                               " requested beyond truncation order " +
                               std::to_string(valid_order_));
    if (e < min_exp_ || e >= stored_end()) return kZero;
    return coef_[static_cast<size_t>(e - min_exp_)];
}

std::optional<long long> LaurentSeries::valuation() const {
    if (coef_.empty()) return std::nullopt;
    return min_exp_;  // normalize() trims leading zeros
}

std::string LaurentSeries::str(long long max_terms) const {
    std::ostringstream os;
    long long printed = 0;
    for (size_t i = 0; i < coef_.size() && printed < max_terms; ++i) {
        if (coef_[i] == 0) continue;
        long long e = min_exp_ + static_cast<long long>(i);
        if (printed) os << " + ";
        os << "(" << coef_[i] << ")q^" << e;
        ++printed;
    }
    if (!printed) os << "0";
    if (valid_order_ < kInfiniteOrder) os << " + O(q^" << valid_order_ << ")";
    return os.str();
}

LaurentSeries truncated(const LaurentSeries& a, long long order) {
    if (order >= a.valid_order() && order >= a.stored_end()) {
        LaurentSeries r = a;
        return r;
    }
    long long keep = std::min(order, a.stored_end()) - a.min_exp();
    std::vector<Rational> c;
    if (keep > 0)
        c.assign(a.coefficients().begin(), a.coefficients().begin() + keep);
    return LaurentSeries(a.min_exp(), std::move(c), std::min(order, a.valid_order()));
}

LaurentSeries negate(const LaurentSeries& a) {
    std::vector<Rational> c = a.coefficients();
    for (auto& x : c) x = -x;
    return LaurentSeries(a.min_exp(), std::move(c), a.valid_order());
}

LaurentSeries scalar_mul(const Rational& c, const LaurentSeries& a) {
    if (c == 0) return LaurentSeries::zero(a.valid_order());
    std::vector<Rational> v = a.coefficients();
    for (auto& x : v) x *= c;
    return LaurentSeries(a.min_exp(), std::move(v), a.valid_order());
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    long long valid = std::min(a.valid_order(), b.valid_order());
    if (a.is_stored_zero() && b.is_stored_zero()) return LaurentSeries::zero(valid);
    long long lo = a.is_stored_zero() ? b.min_exp()
                 : b.is_stored_zero() ? a.min_exp()
                                      : std::min(a.min_exp(), b.min_exp());
    long long hi = std::max(a.stored_end(), b.stored_end());
    hi = std::min(hi, valid);
    if (hi <= lo) return LaurentSeries::zero(valid);
    check_window(hi - lo, "add");
    std::vector<Rational> c(static_cast<size_t>(hi - lo));
    for (long long e = std::max(lo, a.min_exp()); e < std::min(hi, a.stored_end()); ++e)
        c[static_cast<size_t>(e - lo)] += a.coefficients()[static_cast<size_t>(e - a.min_exp())];
    for (long long e = std::max(lo, b.min_exp()); e < std::min(hi, b.stored_end()); ++e)
        c[static_cast<size_t>(e - lo)] += b.coefficients()[static_cast<size_t>(e - b.min_exp())];
    return LaurentSeries(lo, std::move(c), valid);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
    return add(a, negate(b));
}

namespace {

// Shared setup for the two multiply kernels.  Returns false when the product
// is storage-empty.
struct MulPlan {
    long long lo = 0, len = 0, valid = 0;
    bool empty = true;
};

MulPlan mul_plan(const LaurentSeries& a, const LaurentSeries& b) {
    MulPlan p;
    p.valid = std::min(sat_add(a.valid_order(), b.min_exp()),
                       sat_add(b.valid_order(), a.min_exp()));
    if (a.is_stored_zero() || b.is_stored_zero()) return p;
    p.lo = a.min_exp() + b.min_exp();
    long long hi = std::min(a.stored_end() + b.stored_end() - 1, p.valid);
    p.len = hi - p.lo;
    if (p.len <= 0) {
        p.len = 0;
        return p;
    }
    check_window(p.len, "mul");
    p.empty = false;
    return p;
}

}  // namespace

LaurentSeries mul_serial(const LaurentSeries& a, const LaurentSeries& b) {
    MulPlan p = mul_plan(a, b);
    if (p.empty) return LaurentSeries::zero(p.valid);
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    std::vector<Rational> c(static_cast<size_t>(p.len));
    for (size_t i = 0; i < ca.size() && i < static_cast<size_t>(p.len); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; i + j < static_cast<size_t>(p.len) && j < cb.size(); ++j)
            c[i + j] += ca[i] * cb[j];
    }
    return LaurentSeries(p.lo, std::move(c), p.valid);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    MulPlan p = mul_plan(a, b);
    if (p.empty) return LaurentSeries::zero(p.valid);
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    std::vector<Rational> c(static_cast<size_t>(p.len));
    const long long n = p.len;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
        // c[k] = sum_{i+j=k} a[i]*b[j]
        long long i_lo = std::max<long long>(0, k - static_cast<long long>(cb.size()) + 1);
        long long i_hi = std::min<long long>(static_cast<long long>(ca.size()) - 1, k);
        Rational acc(0);
        for (long long i = i_lo; i <= i_hi; ++i)
            acc += ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(k - i)];
        c[static_cast<size_t>(k)] = std::move(acc);
    }
    return LaurentSeries(p.lo, std::move(c), p.valid);
}

LaurentSeries mul(const LaurentSeries& a, const Monomial& m) {
    std::vector<Rational> c = a.coefficients();
    Rational s = m.signed_scalar();
    for (auto& x : c) x *= s;
    return LaurentSeries(a.min_exp() + m.exponent, std::move(c),
                         sat_add(a.valid_order(), m.exponent));
}

LaurentSeries invert_to(const LaurentSeries& a, long long target_order) {
    auto v = a.valuation();
    if (!v)
        throw AllZeroPrefix("invert: series is zero to its truncation order");
    long long val = *v;
    long long usable = std::min(a.valid_order(), sat_add(target_order, 2 * val));
    long long len = usable - val;  // unit-part coefficients available
    if (len <= 0)
        throw AllZeroPrefix("invert: no usable coefficients below the truncation order");
    check_window(len, "invert");
    // unit part u, u_0 != 0; w = 1/u by the standard recurrence
    std::vector<Rational> u(static_cast<size_t>(len));
    for (long long j = 0; j < len; ++j) {
        long long e = val + j;
        if (e >= a.min_exp() && e < a.stored_end())
            u[static_cast<size_t>(j)] = a.coefficients()[static_cast<size_t>(e - a.min_exp())];
    }
    std::vector<Rational> w(static_cast<size_t>(len));
    Rational inv0 = Rational(1) / u[0];
    w[0] = inv0;
    for (long long j = 1; j < len; ++j) {
        Rational acc(0);
        for (long long k = 1; k <= j; ++k)
            if (u[static_cast<size_t>(k)] != 0)
                acc += u[static_cast<size_t>(k)] * w[static_cast<size_t>(j - k)];
        w[static_cast<size_t>(j)] = -acc * inv0;
    }
    return LaurentSeries(-val, std::move(w), usable - 2 * val);
}

LaurentSeries invert(const LaurentSeries& a) {
    if (a.valid_order() >= LaurentSeries::kInfiniteOrder)
        throw QmockError("invert: exact polynomial needs an explicit target order");
    auto v = a.valuation();
    if (!v) throw AllZeroPrefix("invert: series is zero to its truncation order");
    return invert_to(a, a.valid_order() - 2 * *v);
}

LaurentSeries div_to(const LaurentSeries& a, const LaurentSeries& b, long long order) {
    return build_to_order(order, [&](long long T) { return mul(a, invert_to(b, T)); });
}

LaurentSeries geom_inverse(const Monomial& u, long long order) {
    if (u.exponent == 0) {
        Rational c = u.signed_scalar();
        if (c == 1) throw PoleAtSummand("geom_inverse: denominator 1 - (" + u.str() +
                                        ") vanishes identically");
        return truncated(LaurentSeries(Rational(1) / (Rational(1) - c)), order);
    }
    if (u.exponent > 0) {
        // sum_{k>=0} u^k
        check_window(order, "geom_inverse");
        if (order <= 0) return LaurentSeries::zero(order);
        std::vector<Rational> c(static_cast<size_t>(order));
        Rational s = u.signed_scalar();
        Rational p(1);
        for (long long k = 0; k * u.exponent < order; ++k) {
            c[static_cast<size_t>(k * u.exponent)] = p;
            p *= s;
        }
        return LaurentSeries(0, std::move(c), order);
    }
    // 1/(1-u) = -u^{-1} / (1 - u^{-1}), u^{-1} now with positive exponent
    Monomial ui = u.inverse();
    LaurentSeries g = geom_inverse(ui, std::max<long long>(0, order - ui.exponent));
    return mul(negate(g), ui);
}

LaurentSeries pow_nonneg(const LaurentSeries& a, long long k, long long order) {
    if (k < 0) throw QmockError("pow_nonneg: negative power");
    LaurentSeries r(Rational(1));
    LaurentSeries base = a;
    while (k) {
        if (k & 1) r = truncated(mul(r, base), order);
        k >>= 1;
        if (k) base = truncated(mul(base, base), order);
    }
    return truncated(r, order);
}

LaurentSeries substitute_q_power(const LaurentSeries& a, long long M) {
    if (M < 1) throw QmockError("substitute_q_power: M must be >= 1");
    if (a.is_stored_zero())
        return LaurentSeries::zero(sat_add(0, a.valid_order() >= LaurentSeries::kInfiniteOrder
                                                  ? LaurentSeries::kInfiniteOrder
                                                  : a.valid_order() * M));
    long long len = (static_cast<long long>(a.coefficients().size()) - 1) * M + 1;
    check_window(len, "substitute_q_power");
    std::vector<Rational> c(static_cast<size_t>(len));
    for (size_t i = 0; i < a.coefficients().size(); ++i)
        c[static_cast<size_t>(i) * M] = a.coefficients()[i];
    long long valid = a.valid_order() >= LaurentSeries::kInfiniteOrder
                          ? LaurentSeries::kInfiniteOrder
                          : a.valid_order() * M;
    return LaurentSeries(a.min_exp() * M, std::move(c), valid);
}

LaurentSeries pochhammer_finite(const Monomial& x, long long step, long long n,
                                long long trunc) {
    if (step < 1) throw QmockError("pochhammer_finite: step must be >= 1");
    if (n < 0) throw QmockError("pochhammer_finite: n must be >= 0");
    LaurentSeries p(Rational(1));
    for (long long i = 0; i < n; ++i) {
        Monomial f(x.sign, x.scalar, x.exponent + i * step);
        LaurentSeries factor = sub(LaurentSeries(Rational(1)), LaurentSeries::from_monomial(f));
        p = truncated(mul(p, factor), trunc);
        if (p.is_stored_zero() && p.valid_order() >= trunc) break;
    }
    return truncated(p, trunc);
}

LaurentSeries pochhammer_infinite(const Monomial& x, long long step, long long trunc) {
    if (step < 1)
        throw DivergentProduct("pochhammer_infinite: nonpositive step leaves infinitely "
                               "many factors off the identity");
    LaurentSeries p(Rational(1));
    for (long long i = 0;; ++i) {
        long long e = x.exponent + i * step;
        long long pmin = p.is_stored_zero() ? 0 : p.min_exp();
        if (e >= trunc - pmin && e > 0) break;
        Monomial f(x.sign, x.scalar, e);
        LaurentSeries factor = sub(LaurentSeries(Rational(1)), LaurentSeries::from_monomial(f));
        p = truncated(mul(p, factor), trunc);
        if (p.is_stored_zero()) break;  // a factor (1 - 1) annihilated the product
    }
    return truncated(p, trunc);
}

std::optional<long long> first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
    long long hi = std::min(a.valid_order(), b.valid_order());
    if (hi >= LaurentSeries::kInfiniteOrder)
        hi = std::max(a.stored_end(), b.stored_end());
    long long lo = std::min(a.is_stored_zero() ? 0 : a.min_exp(),
                            b.is_stored_zero() ? 0 : b.min_exp());
    for (long long e = lo; e < hi; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return e;
    return std::nullopt;
}

bool series_equal(const LaurentSeries& a, const LaurentSeries& b) {
    return !first_mismatch(a, b).has_value();
}

}  // namespace qmock
