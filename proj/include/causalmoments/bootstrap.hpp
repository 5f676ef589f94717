#ifndef CAUSALMOMENTS_BOOTSTRAP_HPP
#define CAUSALMOMENTS_BOOTSTRAP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "causalmoments/observation_table.hpp"

namespace causalmoments {

enum class ResampleMode {
    Pooled,    // rows resampled jointly, preserving the observed (X, Y) law
    WithinArm, // per-arm resampling for fixed-design studies
};

struct BootstrapConfig {
    int replicates = 1000;
    double level = 0.95;
    std::uint64_t seed = 0;
    ResampleMode mode = ResampleMode::Pooled;

    void validate() const;
};

// Estimator applied to each resampled table. The replicate-specific seed is
// for the estimator's own Monte Carlo integration; estimators that ignore it
// are fine.
using TableEstimator = std::function<double(const ObservationTable&, std::uint64_t)>;

struct BootstrapResult {
    double mean = 0.0;  // mean of surviving replicate values
    double lower = 0.0; // percentile interval, nearest-rank order statistics
    double upper = 0.0;
    std::vector<double> replicate_values; // surviving values, replicate order
    int failed_replicates = 0;
    std::vector<std::string> flags;
};

// One resampled table (rows drawn with replacement), reproducible per
// (table, config, replicate).
ObservationTable resample(const ObservationTable& table, const BootstrapConfig& config,
                          int replicate);

// Percentile bootstrap: B resampled tables, the estimator applied to each
// with a fresh derived integration seed; failed replicates are excluded and
// counted (all failing raises BootstrapError, > 20% failing sets a flag).
BootstrapResult bootstrap_ci(const TableEstimator& estimator, const ObservationTable& table,
                             const BootstrapConfig& config);

} // namespace causalmoments

#endif
