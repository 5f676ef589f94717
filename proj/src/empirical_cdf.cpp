#include "causalmoments/empirical_cdf.hpp"

#include <algorithm>

namespace causalmoments {

EmpiricalCdf EmpiricalCdf::from_arm(const ObservationTable& table, int arm, bool centered) {
    EmpiricalCdf cdf;
    cdf.arm_ = arm;
    cdf.centered_ = centered;
    cdf.center_ = centered ? conditional_mean(table, arm) : 0.0;
    cdf.sorted_values_ = table.arm_outcomes(arm); // throws NoDataError for empty arms
    std::sort(cdf.sorted_values_.begin(), cdf.sorted_values_.end());
    return cdf;
}

double EmpiricalCdf::operator()(double y) const {
    const double query = centered_ ? y + center_ : y;
    const auto it = std::lower_bound(sorted_values_.begin(), sorted_values_.end(), query);
    return static_cast<double>(it - sorted_values_.begin()) /
           static_cast<double>(sorted_values_.size());
}

} // namespace causalmoments
