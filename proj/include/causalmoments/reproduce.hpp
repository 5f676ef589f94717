#ifndef CAUSALMOMENTS_REPRODUCE_HPP
#define CAUSALMOMENTS_REPRODUCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace causalmoments {

// Replicated-simulation protocol over the two benchmark models: for each
// sample size, `replications` independent datasets are drawn and every
// estimator is applied to each; rows report the replicate mean with the
// empirical 2.5%/97.5% band.
struct ReproduceOptions {
    int replications = 1000;
    std::vector<std::int64_t> sample_sizes = {20, 100, 1000};
    std::uint64_t seed = 0;
    std::int64_t mc_points_low = 0;  // joint points for 1-2 dims; 0 -> default
    std::int64_t mc_points_high = 0; // joint points for 3-4 dims; 0 -> default
    bool include_scm_a = true;
    bool include_scm_b = true;
};

struct ReproduceCell {
    double mean = 0.0;
    double p2_5 = 0.0;
    double p97_5 = 0.0;
};

struct ReproduceRow {
    std::string estimator;
    std::optional<double> ground_truth;
    std::map<std::int64_t, ReproduceCell> by_size;
};

struct ReproduceResult {
    ReproduceOptions options;
    std::vector<ReproduceRow> scm_a_rows;
    std::vector<ReproduceRow> scm_b_rows;
};

ReproduceResult run_reproduction(const ReproduceOptions& options);

// Machine-readable artifact; stable layout, suitable for byte comparison.
nlohmann::json reproduce_to_json(const ReproduceResult& result);

// Text tables in the "mean ([2.5%, 97.5%])" cell format.
std::string reproduce_to_table(const ReproduceResult& result);

} // namespace causalmoments

#endif
