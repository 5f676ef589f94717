#ifndef CAUSALMOMENTS_QUADRATURE_HPP
#define CAUSALMOMENTS_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "causalmoments/observation_table.hpp"

namespace causalmoments {

enum class McMode {
    Tensor, // full Cartesian grid of per-axis draws
    Joint,  // i.i.d. m-dimensional uniform points
};

// Monte Carlo settings for one integral over [lower, upper]^dimension.
// Tensor mode enumerates the full product grid, which blows up combinatorially
// past two dimensions; it is therefore rejected for dimension >= 3 unless
// allow_high_dim_tensor is set.
struct IntegrationConfig {
    int dimension = 1;
    McMode mode = McMode::Joint;
    std::vector<std::int64_t> points_per_axis; // tensor mode; empty -> 1000 per axis
    std::int64_t joint_points = 0;             // joint mode; 0 -> dimension default
    std::uint64_t seed = 0;
    std::optional<DomainBounds> bounds;        // resolved from data when absent
    bool allow_high_dim_tensor = false;

    std::int64_t effective_joint_points() const;
    std::vector<std::int64_t> effective_points_per_axis() const;
    IntegrationConfig with_dimension(int dimension) const;
    IntegrationConfig with_bounds(DomainBounds bounds) const;
    void validate() const; // throws ConfigError
};

// Value of a Monte Carlo integral together with its standard-error estimate.
struct IntegralEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t points = 0;
};

// Evaluation contract: maps a point in [lower, upper]^dimension to a real.
// Integrands must be pure; the engine may reuse them across points freely.
using Integrand = std::function<double(std::span<const double>)>;

// Evaluates several quantities per point in one pass over shared draws.
using MultiIntegrand = std::function<void(std::span<const double>, std::span<double>)>;

// `count` i.i.d. uniform draws on [bounds.lower, bounds.upper]; distinct
// (seed, axis_index) pairs give independent streams.
std::vector<double> draw_axis_points(const DomainBounds& bounds, std::int64_t count,
                                     std::uint64_t seed, int axis_index);

// Unbiased MC estimate of the integral of `f` over the configured cube:
// volume times the average of f over the draws. Deterministic for a fixed
// config; degenerate bounds integrate to zero.
IntegralEstimate integrate(const Integrand& f, const IntegrationConfig& config);

// Same pass evaluated for `outputs` quantities at once.
std::vector<IntegralEstimate> integrate_multi(const MultiIntegrand& f, int outputs,
                                              const IntegrationConfig& config);

} // namespace causalmoments

#endif
