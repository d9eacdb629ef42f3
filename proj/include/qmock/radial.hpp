#ifndef QMOCK_RADIAL_HPP
#define QMOCK_RADIAL_HPP

#include <string>
#include <vector>

#include "qmock/bigcomplex.hpp"
#include "qmock/cyclo.hpp"
#include "qmock/mocklib.hpp"

namespace qmock {

struct RadialSample {
    int step;       // t = 1 - 2^{-step}
    BigComplex value;
};

struct RadialResult {
    RadialTheorem theorem;
    long long k = 0;
    long long ell = 0;
    long long root_order = 0;
    long long root_index = 1;
    unsigned precision_bits = 256;
    std::vector<RadialSample> samples;
    BigComplex limit;          // extrapolated at t -> 1
    BigFloat error_estimate;   // difference of the last two extrapolation stages
    BigComplex exact_rhs;      // embed_numeric of rhs_finite_sum
    BigFloat difference;       // |limit - exact_rhs|
    bool pass = false;
    std::string notes;
};

struct RadialOptions {
    std::vector<int> schedule;  // empty -> 4..14
    unsigned precision_bits = 256;
    double tolerance = 1e-4;
    F3Variant f3 = F3Variant::corrected;
    long long term_cap = 1000000;
};

// Numeric building blocks.  All sums stop once five consecutive terms fall
// below the working-precision floor; working precision is escalated by the
// caller (radial_verify) when cancellation is detected, so these take the
// precision explicitly.  |q| < 1 is required throughout.
BigComplex numeric_jtheta(const BigComplex& x, const BigComplex& q, unsigned precision_bits,
                          long long term_cap = 1000000);
BigComplex numeric_appell(const BigComplex& x, const BigComplex& q, const BigComplex& z,
                          unsigned precision_bits, long long term_cap = 1000000);
BigComplex numeric_sumstar_s4(const BigComplex& q, unsigned precision_bits,
                              long long term_cap = 1000000);

// Eulerian series the radial theorems reference (S-series at omega = 1).
BigComplex eval_series_numeric(SeriesId id, const BigComplex& q, unsigned precision_bits,
                               long long term_cap = 1000000);

// The full left-hand side (mock series minus/plus its theta correction) at q.
BigComplex radial_lhs(RadialTheorem t, long long k, const BigComplex& q,
                      unsigned precision_bits, long long term_cap = 1000000);

RadialResult radial_verify(RadialTheorem t, long long k, long long ell, long long root_index,
                           const RadialOptions& opt = {});

std::string radial_result_json(const RadialResult& r);

}  // namespace qmock

#endif
