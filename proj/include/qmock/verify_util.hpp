#ifndef QMOCK_VERIFY_UTIL_HPP
#define QMOCK_VERIFY_UTIL_HPP

#include "qmock/report.hpp"
#include "qmock/series.hpp"

namespace qmock {

// Coefficientwise comparison below `order`; fills in the first mismatch.
VerificationReport compare_series(std::string id, std::string specialization,
                                  const LaurentSeries& lhs, const LaurentSeries& rhs,
                                  long long order, std::string notes = "");

}  // namespace qmock

#endif
