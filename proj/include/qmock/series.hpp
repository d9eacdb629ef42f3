#ifndef QMOCK_SERIES_HPP
#define QMOCK_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmock/errors.hpp"
#include "qmock/rational.hpp"

namespace qmock {

// A specialization value s * c * q^e with s in {+1,-1}, c a nonzero rational.
// Carries the slots x, omega, z, a, b that get substituted into identities.
struct Monomial {
    int sign = +1;
    Rational scalar = Rational(1);
    long long exponent = 0;

    Monomial() = default;
    Monomial(int s, Rational c, long long e);

    static Monomial one() { return Monomial(+1, 1, 0); }
    static Monomial minus_one() { return Monomial(-1, 1, 0); }
    static Monomial q_power(long long e) { return Monomial(+1, 1, e); }
    static Monomial neg_q_power(long long e) { return Monomial(-1, 1, e); }

    // sign folded into the scalar
    Rational signed_scalar() const { return sign < 0 ? Rational(-scalar) : scalar; }

    Monomial inverse() const;
    Monomial times(const Monomial& o) const;
    Monomial power(long long k) const;
    Monomial negate() const { return Monomial(-sign, scalar, exponent); }
    // exponent map e -> M*e (base substitution q -> q^M)
    Monomial substituted(long long M) const { return Monomial(sign, scalar, exponent * M); }

    bool operator==(const Monomial& o) const = default;
    std::string str() const;
};

// Truncated formal Laurent series in q with exact rational coefficients.
//
// Coefficients are stored densely on a finite support window
// [min_exp, min_exp + coef.size()); everything outside the window but below
// valid_order() is exactly zero.  valid_order() is the exclusive upper bound
// of exponents whose coefficients are guaranteed exact; kInfiniteOrder marks
// an exact polynomial (all coefficients known).
class LaurentSeries {
  public:
    static constexpr long long kInfiniteOrder = (1ll << 60);

    LaurentSeries() = default;  // exact zero
    explicit LaurentSeries(const Rational& constant);
    LaurentSeries(long long min_exp, std::vector<Rational> coef,
                  long long valid_order = kInfiniteOrder);

    static LaurentSeries zero(long long valid_order = kInfiniteOrder);
    static LaurentSeries from_monomial(const Monomial& m);

    bool is_stored_zero() const { return coef_.empty(); }
    long long min_exp() const { return min_exp_; }
    long long stored_end() const { return min_exp_ + static_cast<long long>(coef_.size()); }
    long long valid_order() const { return valid_order_; }
    const std::vector<Rational>& coefficients() const { return coef_; }

    // Exact coefficient of q^e; throws BeyondTruncation for e >= valid_order().
    const Rational& coefficient(long long e) const;

    // Exponent of the first nonzero known coefficient, if any.
    std::optional<long long> valuation() const;

    std::string str(long long max_terms = 24) const;

  private:
    void normalize();

    long long min_exp_ = 0;
    std::vector<Rational> coef_;
    long long valid_order_ = kInfiniteOrder;
};

// ---- arithmetic ----

LaurentSeries truncated(const LaurentSeries& a, long long order);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scalar_mul(const Rational& c, const LaurentSeries& a);

// Exact Cauchy product; OpenMP over output coefficients.
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
// Serial reference kernel, kept for testing and benchmarking.
LaurentSeries mul_serial(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries mul(const LaurentSeries& a, const Monomial& m);

// Multiplicative inverse valid to at least `target_order` when the input
// supports it; the achieved order is min(a.valid_order, ...) - 2*valuation.
LaurentSeries invert_to(const LaurentSeries& a, long long target_order);
// Inverse at the input's own (finite) validity.
LaurentSeries invert(const LaurentSeries& a);

// a * invert(b), valid to at least `order` (throws if not achievable).
LaurentSeries div_to(const LaurentSeries& a, const LaurentSeries& b, long long order);

// 1 / (1 - u) for a monomial u, valid to `order`.  Positive exponents expand
// as a geometric series; negative ones via 1/(1-u) = -u^{-1}/(1-u^{-1});
// exponent zero is the constant 1/(1-u) (PoleAtSummand when u == 1).
LaurentSeries geom_inverse(const Monomial& u, long long order);

// Nonnegative integer power.
LaurentSeries pow_nonneg(const LaurentSeries& a, long long k, long long order);

// exponent map e -> M*e
LaurentSeries substitute_q_power(const LaurentSeries& a, long long M);

// (x; q^step)_n = prod_{i=0}^{n-1} (1 - q^{i*step} x), truncated at `trunc`.
LaurentSeries pochhammer_finite(const Monomial& x, long long step, long long n,
                                long long trunc);

// (x; q^step)_inf truncated at `trunc`; factors with nonpositive exponent are
// ordinary polynomial factors, handled in place.
LaurentSeries pochhammer_infinite(const Monomial& x, long long step, long long trunc);

// First exponent (below both validity bounds) where the coefficients differ.
std::optional<long long> first_mismatch(const LaurentSeries& a, const LaurentSeries& b);
bool series_equal(const LaurentSeries& a, const LaurentSeries& b);

// Runs `build(order)` with growing slack until the result is valid to at
// least `trunc`, then truncates.  Centralizes pessimistic-order bookkeeping.
template <class F>
LaurentSeries build_to_order(long long trunc, F&& build) {
    for (long long slack : {16ll, 64ll, 256ll, 1024ll, 4096ll}) {
        LaurentSeries s = build(trunc + slack);
        if (s.valid_order() >= trunc) return truncated(s, trunc);
    }
    throw OrderOverflow("build_to_order: could not reach requested order " +
                        std::to_string(trunc));
}

}  // namespace qmock

#endif
