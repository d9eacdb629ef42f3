#ifndef QMOCK_HECKE_HPP
#define QMOCK_HECKE_HPP

#include "qmock/report.hpp"
#include "qmock/series.hpp"

namespace qmock {

// f_{a,b,c}(x, y, q^M) = (sum_{r,s>=0} - sum_{r,s<0})
//   (-1)^{r+s} x^r y^s q^{a*binom(r,2) + b*r*s + c*binom(s,2)}, then q -> q^M
// applied to the whole series (x, y exponents are in q^M units).
struct HeckeSpec {
    long long a = 1, b = 1, c = 1;
    Monomial x, y;
    long long base = 1;

    HeckeSpec(long long a_, long long b_, long long c_, Monomial x_, Monomial y_,
              long long M = 1);
    std::string str() const;
};

LaurentSeries f_abc(const HeckeSpec& spec, long long trunc);

// 2 J_2 f(x) = f_{1,3,6}(xq, q^5, q) + q f_{1,3,6}(xq^2, q^7, q), where f(x)
// is the even-modulus bilateral tail sum_{n>=0} q^n (q/x;q)_n (x;q)_n / (2 (-q;q)_n).
VerificationReport verify_g2_tail_hecke(const Monomial& x, long long trunc);

// Tail series f(x); also used by the identity registry.
LaurentSeries g2_tail_series(const Monomial& x, long long trunc, long long base = 1);

}  // namespace qmock

#endif
