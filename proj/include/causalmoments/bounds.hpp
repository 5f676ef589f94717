#ifndef CAUSALMOMENTS_BOUNDS_HPP
#define CAUSALMOMENTS_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "causalmoments/identify.hpp"
#include "causalmoments/integrands.hpp"

namespace causalmoments {

struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
    bool contains(double v) const { return lower <= v && v <= upper; }
};

struct IntervalEstimate {
    Interval interval;
    double lower_std_error = 0.0;
    double upper_std_error = 0.0;
    std::vector<std::string> flags;
};

// Frechet envelope (lower, upper) for the joint overlap event of the effect
// (Y_treated - Y_control) over an m-dimensional query point; exposed for
// direct inspection and property tests.
std::pair<Integrand, Integrand> frechet_integrands(int order, const EmpiricalCdf& treated,
                                                   const EmpiricalCdf& control);

// Distribution-free bounds on the m-th (central) moment of the effect,
// requiring exogeneity only.
IntervalEstimate moment_bounds(const ObservationTable& table, int order, ArmPair arms,
                               bool centered, const IntegrationConfig& config);

// Bounds on the (central) product moment of the effects (left) and (right).
IntervalEstimate product_bounds(const ObservationTable& table, ArmPair left, ArmPair right,
                                bool centered, const IntegrationConfig& config);

// Ratio bounds composed from central-moment bound intervals, with the
// denominator guard applied branch by branch.
IntervalEstimate skewness_bounds(const ObservationTable& table, ArmPair arms,
                                 const IntegrationConfig& config);
IntervalEstimate kurtosis_bounds(const ObservationTable& table, ArmPair arms,
                                 const IntegrationConfig& config);

// Covariance bounds divided by effect standard-deviation bounds, guarded and
// clipped into [-1, 1].
IntervalEstimate correlation_bounds(const ObservationTable& table, ArmPair left, ArmPair right,
                                    const IntegrationConfig& config);

// Restores lower <= upper when Monte Carlo noise inverts an interval: small
// inversions (within 3 combined standard errors) are swapped and flagged,
// larger ones indicate under-sampling and raise EstimationError.
IntervalEstimate reconcile_interval(IntervalEstimate estimate);

} // namespace causalmoments

#endif
