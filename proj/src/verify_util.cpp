#include "qmock/verify_util.hpp"

namespace qmock {

VerificationReport compare_series(std::string id, std::string specialization,
                                  const LaurentSeries& lhs, const LaurentSeries& rhs,
                                  long long order, std::string notes) {
    VerificationReport r;
    r.id = std::move(id);
    r.specialization = std::move(specialization);
    r.order = order;
    r.notes = std::move(notes);
    auto mm = first_mismatch(truncated(lhs, order), truncated(rhs, order));
    if (!mm) {
        r.pass = true;
        return r;
    }
    r.pass = false;
    r.mismatch_exponent = *mm;
    r.lhs_coefficient = lhs.coefficient(*mm).str();
    r.rhs_coefficient = rhs.coefficient(*mm).str();
    return r;
}

}  // namespace qmock
