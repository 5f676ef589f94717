#include "causalmoments/quadrature.hpp"

#include <cmath>
#include <string>

#include "causalmoments/errors.hpp"
#include "causalmoments/rng.hpp"

namespace causalmoments {

namespace {

constexpr std::int64_t kDefaultJointPointsLow = 100000;   // dimension <= 2
constexpr std::int64_t kDefaultJointPointsHigh = 1000000; // dimension >= 3
constexpr std::int64_t kDefaultAxisPoints = 1000;

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }

    double total() const { return sum + compensation; }
};

struct Moments {
    CompensatedSum values;
    CompensatedSum squares;

    void add(double v) {
        values.add(v);
        squares.add(v * v);
    }

    // (mean, standard error of the mean) over n samples.
    std::pair<double, double> mean_and_se(std::int64_t n) const {
        const double mean = values.total() / static_cast<double>(n);
        if (n < 2) return {mean, 0.0};
        const double var =
            (squares.total() - static_cast<double>(n) * mean * mean) /
            static_cast<double>(n - 1);
        return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
    }
};

} // namespace

std::int64_t IntegrationConfig::effective_joint_points() const {
    if (joint_points > 0) return joint_points;
    return dimension <= 2 ? kDefaultJointPointsLow : kDefaultJointPointsHigh;
}

std::vector<std::int64_t> IntegrationConfig::effective_points_per_axis() const {
    if (!points_per_axis.empty()) return points_per_axis;
    return std::vector<std::int64_t>(static_cast<std::size_t>(dimension), kDefaultAxisPoints);
}

IntegrationConfig IntegrationConfig::with_dimension(int dim) const {
    IntegrationConfig out = *this;
    out.dimension = dim;
    if (!points_per_axis.empty()) {
        out.points_per_axis.assign(static_cast<std::size_t>(dim), points_per_axis.front());
    }
    return out;
}

IntegrationConfig IntegrationConfig::with_bounds(DomainBounds b) const {
    IntegrationConfig out = *this;
    out.bounds = b;
    return out;
}

void IntegrationConfig::validate() const {
    if (dimension < 1) {
        throw ConfigError("integration dimension must be >= 1, got " +
                          std::to_string(dimension));
    }
    if (bounds) bounds->validate();
    if (mode == McMode::Joint) {
        if (joint_points < 0 || effective_joint_points() < 1) {
            throw ConfigError("joint point count must be >= 1");
        }
    } else {
        const auto per_axis = effective_points_per_axis();
        if (per_axis.size() != static_cast<std::size_t>(dimension)) {
            throw ConfigError("tensor mode needs one point count per axis: got " +
                              std::to_string(per_axis.size()) + " counts for dimension " +
                              std::to_string(dimension));
        }
        for (auto n : per_axis) {
            if (n < 1) throw ConfigError("per-axis point count must be >= 1");
        }
        if (dimension >= 3 && !allow_high_dim_tensor) {
            throw ConfigError(
                "tensor mode over dimension " + std::to_string(dimension) +
                " enumerates a full product grid (about " +
                std::to_string(per_axis.front()) + "^" + std::to_string(dimension) +
                " evaluations); use joint mode, or opt in via allow_high_dim_tensor");
        }
    }
}

std::vector<double> draw_axis_points(const DomainBounds& bounds, std::int64_t count,
                                     std::uint64_t seed, int axis_index) {
    bounds.validate();
    if (count < 1) throw ConfigError("point count must be >= 1");
    UniformStream stream(seed, static_cast<std::uint64_t>(axis_index));
    std::vector<double> points(static_cast<std::size_t>(count));
    for (auto& p : points) p = stream.next(bounds.lower, bounds.upper);
    return points;
}

std::vector<IntegralEstimate> integrate_multi(const MultiIntegrand& f, int outputs,
                                              const IntegrationConfig& config) {
    config.validate();
    if (!config.bounds) {
        throw ConfigError("integration bounds are unresolved; supply or derive them first");
    }
    const DomainBounds bounds = *config.bounds;
    const int dim = config.dimension;

    std::vector<IntegralEstimate> results(static_cast<std::size_t>(outputs));
    if (bounds.width() == 0.0) {
        // Zero-volume cube.
        return results;
    }

    const double volume = std::pow(bounds.width(), dim);
    std::vector<Moments> acc(static_cast<std::size_t>(outputs));
    std::vector<double> point(static_cast<std::size_t>(dim));
    std::vector<double> out(static_cast<std::size_t>(outputs));
    std::int64_t total = 0;

    if (config.mode == McMode::Joint) {
        total = config.effective_joint_points();
        std::vector<UniformStream> streams;
        streams.reserve(static_cast<std::size_t>(dim));
        for (int axis = 0; axis < dim; ++axis) {
            streams.emplace_back(config.seed, static_cast<std::uint64_t>(axis));
        }
        for (std::int64_t t = 0; t < total; ++t) {
            for (int axis = 0; axis < dim; ++axis) {
                point[static_cast<std::size_t>(axis)] =
                    streams[static_cast<std::size_t>(axis)].next(bounds.lower, bounds.upper);
            }
            f(point, out);
            for (int q = 0; q < outputs; ++q) {
                acc[static_cast<std::size_t>(q)].add(out[static_cast<std::size_t>(q)]);
            }
        }
    } else {
        const auto per_axis = config.effective_points_per_axis();
        std::vector<std::vector<double>> axes;
        axes.reserve(static_cast<std::size_t>(dim));
        total = 1;
        for (int axis = 0; axis < dim; ++axis) {
            axes.push_back(draw_axis_points(bounds, per_axis[static_cast<std::size_t>(axis)],
                                            config.seed, axis));
            total *= per_axis[static_cast<std::size_t>(axis)];
        }
        // Odometer walk over the full grid.
        std::vector<std::size_t> index(static_cast<std::size_t>(dim), 0);
        for (std::int64_t t = 0; t < total; ++t) {
            for (int axis = 0; axis < dim; ++axis) {
                point[static_cast<std::size_t>(axis)] =
                    axes[static_cast<std::size_t>(axis)][index[static_cast<std::size_t>(axis)]];
            }
            f(point, out);
            for (int q = 0; q < outputs; ++q) {
                acc[static_cast<std::size_t>(q)].add(out[static_cast<std::size_t>(q)]);
            }
            for (int axis = dim - 1; axis >= 0; --axis) {
                auto& i = index[static_cast<std::size_t>(axis)];
                if (++i < axes[static_cast<std::size_t>(axis)].size()) break;
                i = 0;
            }
        }
    }

    for (int q = 0; q < outputs; ++q) {
        const auto [mean, se] = acc[static_cast<std::size_t>(q)].mean_and_se(total);
        results[static_cast<std::size_t>(q)] = IntegralEstimate{volume * mean, volume * se, total};
    }
    return results;
}

IntegralEstimate integrate(const Integrand& f, const IntegrationConfig& config) {
    auto results = integrate_multi(
        [&f](std::span<const double> point, std::span<double> out) { out[0] = f(point); }, 1,
        config);
    return results.front();
}

} // namespace causalmoments
