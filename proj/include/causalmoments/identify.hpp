#ifndef CAUSALMOMENTS_IDENTIFY_HPP
#define CAUSALMOMENTS_IDENTIFY_HPP

#include <string>
#include <vector>

#include "causalmoments/observation_table.hpp"
#include "causalmoments/quadrature.hpp"

namespace causalmoments {

// Denominators smaller than this are replaced by it before dividing.
constexpr double kDenominatorGuard = 0.01;

// The contrast Y_treated - Y_control.
struct ArmPair {
    int treated = 1;
    int control = 0;

    void validate(const ObservationTable& table) const;
};

struct MomentRequest {
    int order = 1;
    ArmPair arms;
    bool centered = false;
    IntegrationConfig config;
};

// Point estimate plus the Monte Carlo standard error of its integral part.
// Flags record guard/clip events applied on the way to the value.
struct ScalarEstimate {
    double value = 0.0;
    double mc_std_error = 0.0;
    std::vector<std::string> flags;
};

struct DerivedStats {
    double variance = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    ScalarEstimate central_m2;
    ScalarEstimate central_m3;
    ScalarEstimate central_m4;
    std::vector<std::string> flags;
};

// Difference of arm means; needs no integration.
double ate(const ObservationTable& table, ArmPair arms);

// Plug-in m-th (central) moment of the effect under exogeneity+monotonicity.
// Raw requests use raw CDFs over pooled raw bounds; centered requests use
// per-arm centered CDFs over pooled centered bounds.
ScalarEstimate moment_identified(const ObservationTable& table, const MomentRequest& request);

ScalarEstimate central_moment_identified(const ObservationTable& table, MomentRequest request);

// Plug-in product moment of the effects (left) and (right); the config must
// be two-dimensional.
ScalarEstimate product_moment_identified(const ObservationTable& table, ArmPair left,
                                         ArmPair right, const IntegrationConfig& config,
                                         bool centered = false);

ScalarEstimate central_product_moment_identified(const ObservationTable& table, ArmPair left,
                                                 ArmPair right,
                                                 const IntegrationConfig& config);

// Covariance divided by the effect standard deviations, guarded and clipped
// into [-1, 1].
ScalarEstimate correlation_identified(const ObservationTable& table, ArmPair left,
                                      ArmPair right, const IntegrationConfig& config);

// Variance / standard deviation / skewness / kurtosis of the effect from the
// central moments of order 2..4.
DerivedStats derived_stats(const ObservationTable& table, ArmPair arms,
                           const IntegrationConfig& config);

} // namespace causalmoments

#endif
