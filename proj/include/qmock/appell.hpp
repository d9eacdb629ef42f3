#ifndef QMOCK_APPELL_HPP
#define QMOCK_APPELL_HPP

#include <optional>

#include "qmock/report.hpp"
#include "qmock/series.hpp"

namespace qmock {

// m(x, q^M, z): normalized bilateral sum
//   (1/j(z;q^M)) sum_r (-1)^r q^{M binom(r,2)} z^r / (1 - q^{M(r-1)} x z).
struct AppellSpec {
    Monomial x;
    Monomial z;
    long long base = 1;

    AppellSpec(Monomial x_, Monomial z_, long long M);
    std::string str() const;

    // summand denominator 1 - q^{M(r-1)} x z vanishes identically for some r
    bool has_pole() const;
};

LaurentSeries m_series(const AppellSpec& spec, long long trunc);

// Regularized bilateral sum (the *-sum):
//   (1/Jbar_{0,1}) sum_n (1 + 1/x) q^{n(n+1)/2} / ((1+x q^n)(1+q^n/x)),
// with every exponent scaled by `base`.
LaurentSeries sumstar_series(const Monomial& x, long long trunc, long long base = 1);

enum class FunctionalEq { ZShift, XInverse, XShift, ChangeZ, ZFlip };
const char* functional_eq_name(FunctionalEq id);

// Functional-equation checks for m(x,q,z); LHS and RHS are assembled
// independently.
// z1 is used by ChangeZ only.
VerificationReport verify_functional_equation(FunctionalEq id, const Monomial& x,
                                              const Monomial& z,
                                              std::optional<Monomial> z1, long long M,
                                              long long trunc);

enum class EulerianId { RLN1, RLN2a, RLN2b, RLN2c, RLN3, RLN4, RLN5 };
const char* eulerian_id_name(EulerianId id);

// Eulerian sum vs Appell/theta assembly.  base_substitution scales every
// exponent by M before checking; RLN2b forces an even working base so that
// sqrt(-q/x) stays a monomial (that substitution is recorded in the report).
VerificationReport verify_eulerian_identity(EulerianId id, const Monomial& x,
                                            long long trunc, long long base_substitution = 1);

// Ramanujan's bilateral identity: two Eulerian sums equal a theta multiple
// of m(a/b, q, -b).
VerificationReport verify_bilateral_347(const Monomial& a, const Monomial& b,
                                        long long trunc, long long base = 1);

}  // namespace qmock

#endif
