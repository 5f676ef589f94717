#ifndef CAUSALMOMENTS_TEST_UTIL_HPP
#define CAUSALMOMENTS_TEST_UTIL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "causalmoments/observation_table.hpp"

namespace cmtest {

inline causalmoments::ObservationTable make_table(
    std::initializer_list<std::pair<int, double>> rows) {
    std::vector<causalmoments::Observation> observations;
    observations.reserve(rows.size());
    for (const auto& [arm, outcome] : rows) {
        observations.push_back(causalmoments::Observation{arm, outcome});
    }
    return causalmoments::ObservationTable(std::move(observations));
}

inline causalmoments::ObservationTable make_table_with_covariates(
    std::initializer_list<std::tuple<int, double, int>> rows) {
    std::vector<causalmoments::Observation> observations;
    std::vector<int> covariates;
    for (const auto& [arm, outcome, w] : rows) {
        observations.push_back(causalmoments::Observation{arm, outcome});
        covariates.push_back(w);
    }
    return causalmoments::ObservationTable(std::move(observations), std::move(covariates));
}

} // namespace cmtest

#endif
