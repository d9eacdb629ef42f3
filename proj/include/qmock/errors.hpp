#ifndef QMOCK_ERRORS_HPP
#define QMOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmock {

struct QmockError : std::runtime_error {
    explicit QmockError(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient requested at or beyond the series' guaranteed order.
struct BeyondTruncation : QmockError {
    using QmockError::QmockError;
};

// Inversion of a series that is zero everywhere it is known.
struct AllZeroPrefix : QmockError {
    using QmockError::QmockError;
};

// Exponent or window-size bookkeeping left the supported range.
struct OrderOverflow : QmockError {
    using QmockError::QmockError;
};

// Infinite product whose factors perturb the constant term forever.
struct DivergentProduct : QmockError {
    using QmockError::QmockError;
};

// A summand's denominator 1 - u vanishes identically.
struct PoleAtSummand : QmockError {
    using QmockError::QmockError;
};

// The theta series j(z;q^M) in an Appell-Lerch denominator is identically zero.
struct ThetaDenominatorZero : QmockError {
    using QmockError::QmockError;
};

// A specialization makes a denominator theta (or pochhammer factor) vanish.
struct NonGenericSpecialization : QmockError {
    using QmockError::QmockError;
};

// Eulerian builder hit a denominator factor with zero constant term.
struct DivergenceAtSpecialization : QmockError {
    using QmockError::QmockError;
};

// Hecke double-sum quadrant does not grow along some ray.
struct NonTerminatingQuadrant : QmockError {
    using QmockError::QmockError;
};

// Cyclotomic division by zero (e.g. the degenerate PSI10 l=5 case).
struct DivisionByZero : QmockError {
    using QmockError::QmockError;
};

// Radial theorem parameters violate the root-order condition.
struct InadmissibleOrder : QmockError {
    using QmockError::QmockError;
};

// Numeric summation exceeded the configured term cap.
struct NoConvergenceBudget : QmockError {
    using QmockError::QmockError;
};

// Unknown registry / catalog identifier.
struct UnknownId : QmockError {
    using QmockError::QmockError;
};

}  // namespace qmock

#endif
