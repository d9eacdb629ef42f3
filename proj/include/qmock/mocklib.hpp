#ifndef QMOCK_MOCKLIB_HPP
#define QMOCK_MOCKLIB_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmock/report.hpp"
#include "qmock/series.hpp"
#include "qmock/theta.hpp"

namespace qmock {

// Closed catalog of the named q-hypergeometric series.
enum class SeriesId {
    f3, b3, w3, theta_w,
    R, U, R2, U2,
    S1, V1, S2, V2, S3, V3, S4, V4,
    g3, g3_alt, g2, g2_tail,
    B2, B2_alt, phi10, psi10,
};
const char* series_name(SeriesId id);
SeriesId series_id_from_name(const std::string& name);  // throws UnknownId

// The argument slot (omega / x / ...) plus a global base substitution q -> q^M
// applied to the series' own structure.  The argument monomial is used
// literally (it is NOT rescaled by the base).
struct Specialization {
    Monomial x = Monomial::one();
    long long base = 1;
    std::string str() const;
};

LaurentSeries build_series(SeriesId id, const Specialization& spec, long long trunc);

struct IdentityEntry {
    std::string id;
    std::string citation;    // where the identity comes from, descriptively
    std::string quote;       // the display being checked, in TeX-ish shorthand
    std::string spec_shape;  // required shape of the specialization
    bool fixed = false;      // statement pins the specialization down
    // nonempty when the source display disagrees with the series arithmetic;
    // expected_mismatch means even the stored form cannot hold and the check
    // is expected to report a mismatch
    std::string discrepancy;
    bool expected_mismatch = false;
    // denominator thetas that must not vanish (unit-scalar specializations)
    std::vector<std::function<ThetaSpec(const Specialization&)>> manifest;
    // either lhs+rhs, or a self-contained check
    std::function<LaurentSeries(const Specialization&, long long)> lhs, rhs;
    std::function<VerificationReport(const Specialization&, long long)> custom;
    std::vector<Specialization> default_specs;
};

const std::vector<IdentityEntry>& registry();
const IdentityEntry& registry_entry(const std::string& id);

// Names every vanishing denominator theta; empty means admissible.
std::vector<ThetaSpec> genericity_scan(const IdentityEntry& entry,
                                       const Specialization& spec);

VerificationReport check_identity(const IdentityEntry& entry, const Specialization& spec,
                                  long long trunc);

struct SearchBounds {
    long long max_exponent = 2;
    long long max_base = 2;
};
// All (sign, exponent, base) unit-scalar specializations within bounds that
// survive the manifest scan and a low-order trial evaluation.
std::vector<Specialization> find_admissible_specializations(const IdentityEntry& entry,
                                                            const SearchBounds& bounds);

// Polynomial in omega (Laurent) and q with the q-order truncated.
struct BivariatePolynomial {
    long long trunc = 0;
    // coef[e] maps omega-exponent -> coefficient of omega^m q^e
    std::vector<std::map<long long, Rational>> coef;

    Rational at(long long omega_exp, long long q_exp) const;
};

// sum_{n>=0} q^{n+1} (wq;q)_n (q/w;q)_n as a bivariate polynomial in w, q.
BivariatePolynomial build_bivariate_U(long long trunc);
LaurentSeries evaluate_bivariate(const BivariatePolynomial& p, const Monomial& omega);

struct UnimodalCount {
    long long n = 0;      // size
    long long m = 0;      // rank
    unsigned long long count = 0;
};
// Counts of strongly unimodal sequences by size and rank, via dynamic
// programming over distinct-part flanks; rank = (#parts after the peak) -
// (#parts before the peak), negated when rank_sign is -1.
std::vector<UnimodalCount> unimodal_counts(long long n_max, int rank_sign = +1);

}  // namespace qmock

#endif
