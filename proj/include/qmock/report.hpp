#ifndef QMOCK_REPORT_HPP
#define QMOCK_REPORT_HPP

#include <optional>
#include <string>

namespace qmock {

// Outcome of one coefficientwise identity check.
struct VerificationReport {
    std::string id;
    std::string specialization;
    long long order = 0;
    bool pass = false;
    std::optional<long long> mismatch_exponent;
    std::string lhs_coefficient;  // at the mismatch, when any
    std::string rhs_coefficient;
    std::string notes;
};

}  // namespace qmock

#endif
