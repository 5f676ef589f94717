#ifndef CAUSALMOMENTS_CONDITIONAL_HPP
#define CAUSALMOMENTS_CONDITIONAL_HPP

#include "causalmoments/bounds.hpp"
#include "causalmoments/identify.hpp"

namespace causalmoments {

// Sub-table of the rows with covariate == level; the arm set is recomputed
// and per-stratum quantities (means, bounds, centers) derive from the
// sub-table alone.
ObservationTable stratify(const ObservationTable& table, int level);

// Covariate-conditional quantities: identical to the unconditional operation
// applied to the stratified sub-table.
double conditional_ate(const ObservationTable& table, int level, ArmPair arms);

ScalarEstimate conditional_moment_identified(const ObservationTable& table, int level,
                                             const MomentRequest& request);

ScalarEstimate conditional_product_moment_identified(const ObservationTable& table, int level,
                                                     ArmPair left, ArmPair right,
                                                     const IntegrationConfig& config,
                                                     bool centered = false);

IntervalEstimate conditional_moment_bounds(const ObservationTable& table, int level, int order,
                                           ArmPair arms, bool centered,
                                           const IntegrationConfig& config);

// Empirical covariate distribution P(W = level), for aggregating per-stratum
// results.
double covariate_weight(const ObservationTable& table, int level);

} // namespace causalmoments

#endif
