#ifndef QMOCK_EULERIAN_HPP
#define QMOCK_EULERIAN_HPP

#include <functional>
#include <vector>

#include "qmock/series.hpp"

namespace qmock {

// One q-Pochhammer family appearing in each term of a q-hypergeometric sum:
// (u; q^step)_{count(n)}.  count must be nondecreasing in n.
struct PochSpec {
    Monomial u;
    long long step = 1;
    std::function<long long(long long)> count;
};

// term(n) = mon(n) * prod num / prod den, summed for n >= n0;
// the final result is prefactor * sum + addend.
struct EulerianSum {
    long long n0 = 0;
    std::function<Monomial(long long)> mon;
    std::vector<PochSpec> num;
    std::vector<PochSpec> den;
    LaurentSeries prefactor = LaurentSeries(Rational(1));
    LaurentSeries addend = LaurentSeries::zero();
};

// Exact truncated evaluation with incremental pochhammer updates.  Throws
// DivergenceAtSpecialization when a denominator factor vanishes identically.
LaurentSeries eulerian_series(const EulerianSum& sum, long long trunc);

}  // namespace qmock

#endif
