#ifndef CAUSALMOMENTS_EMPIRICAL_CDF_HPP
#define CAUSALMOMENTS_EMPIRICAL_CDF_HPP

#include <vector>

#include "causalmoments/observation_table.hpp"

namespace causalmoments {

// Step function y -> P(Y < y | X = arm) with a strict inequality: ties at the
// query point count as "not less". In centered mode the function is
// P(Y - E[Y | X = arm] < y | X = arm); evaluation shifts the query by the arm
// mean, so the shift identity against the raw CDF holds bit-for-bit.
class EmpiricalCdf {
public:
    static EmpiricalCdf from_arm(const ObservationTable& table, int arm, bool centered);

    // P(Y < y) (raw) or P(Y - center < y) (centered), in [0, 1] exactly.
    double operator()(double y) const;

    int arm() const { return arm_; }
    bool centered() const { return centered_; }
    double center() const { return center_; }
    std::size_t count() const { return sorted_values_.size(); }
    const std::vector<double>& sorted_values() const { return sorted_values_; }

private:
    EmpiricalCdf() = default;

    int arm_ = 0;
    bool centered_ = false;
    double center_ = 0.0;
    std::vector<double> sorted_values_;
};

} // namespace causalmoments

#endif
