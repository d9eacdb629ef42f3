#ifndef QMOCK_THETA_HPP
#define QMOCK_THETA_HPP

#include "qmock/series.hpp"

namespace qmock {

// Argument of j(x; q^M).  Theta arguments in this codebase are +-q^a; a unit
// scalar is enforced so lattice-zero detection stays exact.
struct ThetaSpec {
    Monomial x;
    long long base = 1;

    ThetaSpec(Monomial arg, long long M);
    std::string str() const;
};

// j(x;q^M) vanishes exactly at x = q^{M k}.
bool is_lattice_zero(const ThetaSpec& spec);

// Product form (x)_inf (q^M/x)_inf (q^M)_inf.
LaurentSeries jtheta_product(const ThetaSpec& spec, long long trunc);

// Bilateral sum sum_n (-1)^n q^{M*binom(n,2)} x^n.
LaurentSeries jtheta_sum(const ThetaSpec& spec, long long trunc);

// Product form for a general monomial argument (no unit-scalar restriction);
// used internally where specializations multiply into the argument.
LaurentSeries jtheta_general(const Monomial& x, long long M, long long trunc);
bool jtheta_vanishes(const Monomial& x, long long M);

enum class ThetaKind { J, Jbar, Jm };

// J_{a,m} = j(q^a;q^m), Jbar_{a,m} = j(-q^a;q^m), J_m = J_{m,3m}.
LaurentSeries theta_shorthand(ThetaKind kind, long long a, long long m, long long trunc);

}  // namespace qmock

#endif
