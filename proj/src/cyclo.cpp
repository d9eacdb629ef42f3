#include "qmock/cyclo.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <mutex>
#include <sstream>

namespace qmock {

namespace {

// polynomials are coefficient vectors, constant term first
void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder of a modulo m (m nonzero); both exact over Q
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& m) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational f = a.back() / m.back();
        size_t off = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) a[off + i] -= f * m[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division of integer polynomials, constant term first
std::vector<Integer> int_poly_div(std::vector<Integer> num,
                                  const std::vector<Integer>& den) {
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (size_t k = quot.size(); k-- > 0;) {
        Integer f = num[k + den.size() - 1] / den.back();
        quot[k] = f;
        for (size_t i = 0; i < den.size(); ++i) num[k + i] -= f * den[i];
    }
    return quot;
}

std::mutex phi_mutex;
std::map<long long, std::vector<Integer>> phi_cache;

std::vector<Integer> cyclotomic_poly_locked(long long n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d
    std::vector<Integer> num(static_cast<size_t>(n) + 1, Integer(0));
    num[0] = -1;
    num.back() = 1;
    std::vector<Integer> den{Integer(1)};
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<Integer>& pd = cyclotomic_poly_locked(d);
        std::vector<Integer> next(den.size() + pd.size() - 1, Integer(0));
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < pd.size(); ++j) next[i + j] += den[i] * pd[j];
        den = std::move(next);
    }
    std::vector<Integer> phi = int_poly_div(num, den);
    phi_cache.emplace(n, phi);
    return phi;
}

std::vector<Rational> phi_rational(long long n) {
    std::vector<Integer> p = cyclotomic_poly(n);
    std::vector<Rational> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
    return r;
}

}  // namespace

std::vector<Integer> cyclotomic_poly(long long n) {
    if (n < 1) throw QmockError("cyclotomic_poly: order must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_poly_locked(n);
}

CyclotomicNumber::CyclotomicNumber(const Rational& r, long long n) : n_(n) {
    c_.assign(phi_rational(n).size() - 1, Rational(0));
    c_[0] = r;
}

CyclotomicNumber CyclotomicNumber::zeta_power(long long j, long long n) {
    j %= n;
    if (j < 0) j += n;
    std::vector<Rational> phi = phi_rational(n);
    std::vector<Rational> p(static_cast<size_t>(j) + 1, Rational(0));
    p.back() = 1;
    p = poly_rem(std::move(p), phi);
    CyclotomicNumber a(Rational(0), n);
    for (size_t i = 0; i < p.size(); ++i) a.c_[i] = p[i];
    return a;
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << " + ";
        os << c_[i];
        if (i > 0) os << "*z^" << i;
        any = true;
    }
    if (!any) os << "0";
    os << "  (z = zeta_" << n_ << ")";
    return os.str();
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& o) const {
    if (n_ != o.n_) throw QmockError("cyclotomic arithmetic across different orders");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    require_same_order(o);
    CyclotomicNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    require_same_order(o);
    CyclotomicNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (Rational& x : r.c_) x = -x;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    require_same_order(o);
    std::vector<Rational> p = poly_rem(poly_mul(c_, o.c_), phi_rational(n_));
    CyclotomicNumber r(Rational(0), n_);
    for (size_t i = 0; i < p.size(); ++i) r.c_[i] = p[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" +
                                        std::to_string(n_) + ")");
    // extended Euclid: s*a + t*Phi_n = gcd = nonzero rational (Phi irreducible)
    std::vector<Rational> r0 = phi_rational(n_), r1 = c_;
    trim(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};  // coefficients of a
    while (true) {
        // r0 = q*r1 + r2
        std::vector<Rational> r2 = r0, q(r0.size() > r1.size() ? r0.size() - r1.size() + 1
                                                               : size_t(1),
                                         Rational(0));
        trim(r2);
        while (r2.size() >= r1.size()) {
            Rational f = r2.back() / r1.back();
            size_t off = r2.size() - r1.size();
            q[off] = f;
            for (size_t i = 0; i < r1.size(); ++i) r2[off + i] -= f * r1[i];
            r2.pop_back();
            trim(r2);
        }
        std::vector<Rational> s2 = s0;
        std::vector<Rational> qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        if (r2.empty()) {
            // r1 is the gcd; it must be a nonzero constant
            if (r1.size() != 1)
                throw QmockError("Phi_n not coprime to element: non-constant gcd");
            CyclotomicNumber inv(Rational(0), n_);
            std::vector<Rational> sc = poly_rem(std::move(s1), phi_rational(n_));
            for (size_t i = 0; i < sc.size(); ++i) inv.c_[i] = sc[i] / r1[0];
            return inv;
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const {
    return *this * o.inverse();
}

CyclotomicNumber CyclotomicNumber::power(long long k) const {
    CyclotomicNumber base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-(k + 1)) + 1ull;
    CyclotomicNumber acc(Rational(1), n_);
    while (e) {
        if (e & 1ull) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return n_ == o.n_ && c_ == o.c_;
}

CyclotomicNumber poch_at_root(long long arg_power, long long step_power, long long count,
                              long long n, int sign) {
    CyclotomicNumber acc(Rational(1), n);
    const Rational s(sign);
    for (long long i = 0; i < count; ++i) {
        CyclotomicNumber factor =
            CyclotomicNumber(Rational(1), n) -
            CyclotomicNumber(s, n) *
                CyclotomicNumber::zeta_power(arg_power + i * step_power, n);
        acc = acc * factor;
    }
    return acc;
}

RadialTheorem radial_theorem_from_name(const std::string& name) {
    if (name == "FOR") return RadialTheorem::FOR;
    if (name == "W3") return RadialTheorem::W3;
    if (name == "EX1") return RadialTheorem::EX1;
    if (name == "EX2") return RadialTheorem::EX2;
    if (name == "EX3") return RadialTheorem::EX3;
    if (name == "EX4") return RadialTheorem::EX4;
    if (name == "B2") return RadialTheorem::B2;
    if (name == "PSI10") return RadialTheorem::PSI10;
    throw UnknownId("unknown radial theorem: " + name);
}

const char* radial_theorem_name(RadialTheorem t) {
    switch (t) {
        case RadialTheorem::FOR: return "FOR";
        case RadialTheorem::W3: return "W3";
        case RadialTheorem::EX1: return "EX1";
        case RadialTheorem::EX2: return "EX2";
        case RadialTheorem::EX3: return "EX3";
        case RadialTheorem::EX4: return "EX4";
        case RadialTheorem::B2: return "B2";
        case RadialTheorem::PSI10: return "PSI10";
    }
    throw UnknownId("bad radial theorem enum");
}

long long radial_root_order(RadialTheorem t, long long k, long long ell) {
    auto bad = [&](const char* why) {
        throw InadmissibleOrder(std::string(radial_theorem_name(t)) + ": " + why);
    };
    switch (t) {
        case RadialTheorem::FOR:
            if (k < 1) bad("needs k >= 1");
            return 2 * k;
        case RadialTheorem::W3:
            if (k < 0) bad("needs k >= 0");
            return 2 * k + 1;
        case RadialTheorem::EX1:
            if (k < 1 || k % 2 == 0) bad("needs odd k >= 1");
            return 2 * k;
        case RadialTheorem::EX2:
            if (k < 0) bad("needs k >= 0");
            return 2 * k + 1;
        case RadialTheorem::EX3:
            if (k < 1) bad("needs k >= 1");
            return 4 * k;
        case RadialTheorem::EX4:
            if (k < 1) bad("needs k >= 1");
            return 2 * k;
        case RadialTheorem::B2:
            if (k < 0) bad("needs k >= 0");
            return 2 * k + 1;
        case RadialTheorem::PSI10:
            if (k < 0) bad("needs k >= 0");
            if (ell != 1 && ell != 3 && ell != 5 && ell != 7 && ell != 9)
                bad("needs ell in {1,3,5,7,9}");
            return 10 * k + ell;
    }
    throw UnknownId("bad radial theorem enum");
}

CyclotomicNumber rhs_finite_sum(RadialTheorem t, long long k, long long ell,
                                F3Variant f3) {
    const long long N = radial_root_order(t, k, ell);
    auto Z = [&](long long j) { return CyclotomicNumber::zeta_power(j, N); };
    auto C = [&](const Rational& r) { return CyclotomicNumber(r, N); };
    CyclotomicNumber sum(Rational(0), N);

    switch (t) {
        case RadialTheorem::FOR:
            // -4 sum_{n=0}^{k-1} (-z;z)_n^2 z^{n+1}
            for (long long n = 0; n < k; ++n) {
                CyclotomicNumber p = poch_at_root(1, 1, n, N, -1);
                sum = sum + p * p * Z(n + 1);
            }
            return C(Rational(-4)) * sum;
        case RadialTheorem::W3:
            // - sum_{n=0}^{k} (z;z^2)_n^2 z^{2n+1}
            for (long long n = 0; n <= k; ++n) {
                CyclotomicNumber p = poch_at_root(1, 2, n, N, +1);
                sum = sum + p * p * Z(2 * n + 1);
            }
            return -sum;
        case RadialTheorem::EX1:
            // -2 sum_{n=0}^{(k-1)/2} z^{2n+1} (-z;z^2)_n^2 / (z;z^2)_{n+1}
            for (long long n = 0; n <= (k - 1) / 2; ++n) {
                CyclotomicNumber p = poch_at_root(1, 2, n, N, -1);
                sum = sum + Z(2 * n + 1) * p * p / poch_at_root(1, 2, n + 1, N, +1);
            }
            return C(Rational(-2)) * sum;
        case RadialTheorem::EX2:
            // -2 sum_{n=0}^{k} (z;z^2)_n^2 z^{2n+1} / (-z;z)_{2n+1}
            for (long long n = 0; n <= k; ++n) {
                CyclotomicNumber p = poch_at_root(1, 2, n, N, +1);
                sum = sum + p * p * Z(2 * n + 1) / poch_at_root(1, 1, 2 * n + 1, N, -1);
            }
            return C(Rational(-2)) * sum;
        case RadialTheorem::EX3:
            // -2 sum_{n=0}^{k-1} z^{2n+2} (-z^2;z^2)_n^2 / (z;z^2)_{n+1}
            for (long long n = 0; n < k; ++n) {
                CyclotomicNumber p = poch_at_root(2, 2, n, N, -1);
                sum = sum + Z(2 * n + 2) * p * p / poch_at_root(1, 2, n + 1, N, +1);
            }
            return C(Rational(-2)) * sum;
        case RadialTheorem::EX4:
            // -2 sum_{n=0}^{k-1} z^{n+1} (-z;z)_n^2 / (z;z^2)_{n+1}
            for (long long n = 0; n < k; ++n) {
                CyclotomicNumber p = poch_at_root(1, 1, n, N, -1);
                sum = sum + Z(n + 1) * p * p / poch_at_root(1, 2, n + 1, N, +1);
            }
            return C(Rational(-2)) * sum;
        case RadialTheorem::B2:
            // -1/2 sum_{n=0}^{k} z^{2n} (z;z^2)_n^2 / (-z^2;z^2)_n
            for (long long n = 0; n <= k; ++n) {
                CyclotomicNumber p = poch_at_root(1, 2, n, N, +1);
                sum = sum + Z(2 * n) * p * p / poch_at_root(2, 2, n, N, -1);
            }
            return C(Rational(-1, 2)) * sum;
        case RadialTheorem::PSI10: {
            // -z * F(ell); terms z^{5n} (z;z^5)_n (z^4;z^5)_n / (-z^5;z^5)_n,
            // with the first factor read off (z;z^2)_n in the ell=3 paper variant
            auto term = [&](long long n, bool paper3) {
                CyclotomicNumber a = paper3 ? poch_at_root(1, 2, n, N, +1)
                                            : poch_at_root(1, 5, n, N, +1);
                return Z(5 * n) * a * poch_at_root(4, 5, n, N, +1) /
                       poch_at_root(5, 5, n, N, -1);
            };
            long long upper;
            bool paper3 = false;
            switch (ell) {
                case 1: upper = 2 * k; break;
                case 3:
                    upper = 4 * k + 1;
                    paper3 = (f3 == F3Variant::paper);
                    break;
                case 5: upper = 2 * k; break;
                case 7: upper = 4 * k + 2; break;
                default: upper = 2 * k + 1; break;  // ell = 9
            }
            for (long long n = 0; n <= upper; ++n) sum = sum + term(n, paper3);
            if (ell == 5) {
                CyclotomicNumber guard =
                    C(Rational(1)) - poch_at_root(1, 5, 2 * k + 1, N, +1) *
                                         poch_at_root(4, 5, 2 * k + 1, N, +1) /
                                         poch_at_root(5, 5, 2 * k + 1, N, -1);
                if (guard.is_zero())
                    throw DivisionByZero("PSI10 ell=5: degenerate guard denominator");
                sum = sum / guard;
            }
            return -Z(1) * sum;
        }
    }
    throw UnknownId("bad radial theorem enum");
}

BigComplex embed_numeric(const CyclotomicNumber& a, long long root_index,
                         unsigned precision_bits) {
    const unsigned digits = bits_to_digits(precision_bits + 32);
    const unsigned saved = BigFloat::default_precision();
    BigFloat::default_precision(digits);
    BigFloat theta = 2 * boost::math::constants::pi<BigFloat>() *
                     BigFloat(root_index) / BigFloat(a.order());
    BigComplex z{cos(theta), sin(theta)};
    BigComplex acc;
    const std::vector<Rational>& c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * z;
        acc += BigComplex(c[i], digits);
    }
    BigFloat::default_precision(saved);
    return acc;
}

}  // namespace qmock
