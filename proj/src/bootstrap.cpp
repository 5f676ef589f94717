#include "causalmoments/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "causalmoments/errors.hpp"
#include "causalmoments/parallel.hpp"
#include "causalmoments/rng.hpp"

namespace causalmoments {

namespace {

// Stream tags so row draws and estimator seeds never collide.
constexpr std::uint64_t kRowStream = 0x626f6f74; // "boot"
constexpr std::uint64_t kMcStream = 0x6d633030;  // "mc00"

double nearest_rank(const std::vector<double>& sorted, double q) {
    const auto n = static_cast<double>(sorted.size());
    // Epsilon guard so q*n that is an integer up to rounding does not get
    // pushed to the next rank.
    auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

} // namespace

void BootstrapConfig::validate() const {
    if (replicates < 2) {
        throw ConfigError("bootstrap needs >= 2 replicates, got " +
                          std::to_string(replicates));
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw ConfigError("confidence level must lie in (0, 1), got " + std::to_string(level));
    }
}

ObservationTable resample(const ObservationTable& table, const BootstrapConfig& config,
                          int replicate) {
    if (table.empty()) throw NoDataError("cannot resample an empty table");
    UniformStream stream(derive_seed(config.seed, kRowStream),
                         static_cast<std::uint64_t>(replicate));

    std::vector<Observation> rows;
    std::vector<int> covariates;
    rows.reserve(table.size());
    auto take = [&](std::size_t index) {
        rows.push_back(table.rows()[index]);
        if (table.has_covariates()) covariates.push_back(table.covariates()[index]);
    };

    if (config.mode == ResampleMode::Pooled) {
        for (std::size_t t = 0; t < table.size(); ++t) take(stream.next_index(table.size()));
    } else {
        // Row indices per arm, then each arm resampled at its own size.
        for (const auto& [arm, count] : table.arm_counts()) {
            std::vector<std::size_t> members;
            members.reserve(count);
            for (std::size_t t = 0; t < table.size(); ++t) {
                if (table.rows()[t].arm == arm) members.push_back(t);
            }
            for (std::size_t t = 0; t < members.size(); ++t) {
                take(members[stream.next_index(members.size())]);
            }
        }
    }
    if (table.has_covariates()) {
        return ObservationTable(std::move(rows), std::move(covariates));
    }
    return ObservationTable(std::move(rows));
}

BootstrapResult bootstrap_ci(const TableEstimator& estimator, const ObservationTable& table,
                             const BootstrapConfig& config) {
    config.validate();
    if (table.empty()) throw NoDataError("cannot bootstrap an empty table");

    const auto replicates = static_cast<std::size_t>(config.replicates);
    std::vector<std::optional<double>> values(replicates);
    parallel_for(replicates, [&](std::size_t r) {
        const auto replicate_table = resample(table, config, static_cast<int>(r));
        const std::uint64_t mc_seed = derive_seed(derive_seed(config.seed, kMcStream), r);
        try {
            const double value = estimator(replicate_table, mc_seed);
            if (std::isfinite(value)) values[r] = value;
        } catch (const std::exception&) {
            // counted below
        }
    });

    BootstrapResult result;
    for (const auto& value : values) {
        if (value) {
            result.replicate_values.push_back(*value);
        } else {
            ++result.failed_replicates;
        }
    }
    if (result.replicate_values.empty()) {
        throw BootstrapError("all " + std::to_string(config.replicates) +
                             " bootstrap replicates failed");
    }
    if (result.failed_replicates * 5 > config.replicates) {
        result.flags.push_back("high_replicate_failure_rate");
    }

    double sum = 0.0;
    for (double v : result.replicate_values) sum += v;
    result.mean = sum / static_cast<double>(result.replicate_values.size());

    std::vector<double> sorted(result.replicate_values);
    std::sort(sorted.begin(), sorted.end());
    const double tail = (1.0 - config.level) / 2.0;
    result.lower = nearest_rank(sorted, tail);
    result.upper = nearest_rank(sorted, 1.0 - tail);
    return result;
}

} // namespace causalmoments
