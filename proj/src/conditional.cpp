#include "causalmoments/conditional.hpp"

#include "causalmoments/errors.hpp"

namespace causalmoments {

ObservationTable stratify(const ObservationTable& table, int level) {
    if (!table.has_covariates()) {
        throw ValidationError("table has no covariate column to stratify on");
    }
    std::vector<Observation> rows;
    std::vector<int> covariates;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.covariates()[i] == level) {
            rows.push_back(table.rows()[i]);
            covariates.push_back(level);
        }
    }
    if (rows.empty()) {
        throw NoDataError("no observations for covariate level " + std::to_string(level));
    }
    return ObservationTable(std::move(rows), std::move(covariates));
}

double conditional_ate(const ObservationTable& table, int level, ArmPair arms) {
    return ate(stratify(table, level), arms);
}

ScalarEstimate conditional_moment_identified(const ObservationTable& table, int level,
                                             const MomentRequest& request) {
    return moment_identified(stratify(table, level), request);
}

ScalarEstimate conditional_product_moment_identified(const ObservationTable& table, int level,
                                                     ArmPair left, ArmPair right,
                                                     const IntegrationConfig& config,
                                                     bool centered) {
    return product_moment_identified(stratify(table, level), left, right, config, centered);
}

IntervalEstimate conditional_moment_bounds(const ObservationTable& table, int level, int order,
                                           ArmPair arms, bool centered,
                                           const IntegrationConfig& config) {
    return moment_bounds(stratify(table, level), order, arms, centered, config);
}

double covariate_weight(const ObservationTable& table, int level) {
    if (!table.has_covariates()) {
        throw ValidationError("table has no covariate column");
    }
    std::size_t count = 0;
    for (int w : table.covariates()) {
        if (w == level) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(table.size());
}

} // namespace causalmoments
