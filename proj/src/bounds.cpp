#include "causalmoments/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "causalmoments/empirical_cdf.hpp"
#include "causalmoments/errors.hpp"

namespace causalmoments {

namespace {

IntegrationConfig resolve(const ObservationTable& table, bool centered,
                          const IntegrationConfig& config, int dimension) {
    IntegrationConfig resolved = config.with_dimension(dimension);
    if (!resolved.bounds) {
        resolved.bounds = domain_bounds(table, centered);
    }
    resolved.validate();
    return resolved;
}

double guard_denominator(double denom, std::vector<std::string>& flags) {
    if (denom < kDenominatorGuard) {
        flags.push_back("denominator_guarded");
        return kDenominatorGuard;
    }
    return denom;
}

IntervalEstimate from_pair(const std::vector<IntegralEstimate>& pair) {
    IntervalEstimate out;
    out.interval = Interval{pair[0].value, pair[1].value};
    out.lower_std_error = pair[0].std_error;
    out.upper_std_error = pair[1].std_error;
    return out;
}

} // namespace

std::pair<Integrand, Integrand> frechet_integrands(int order, const EmpiricalCdf& treated,
                                                   const EmpiricalCdf& control) {
    if (order < 1) {
        throw ConfigError("moment order must be >= 1, got " + std::to_string(order));
    }
    if (treated.centered() != control.centered()) {
        throw ConfigError("Frechet envelope needs both CDFs in the same centering mode");
    }
    return make_frechet_pair_integrands(cdf_fn(treated), cdf_fn(control), order);
}

IntervalEstimate moment_bounds(const ObservationTable& table, int order, ArmPair arms,
                               bool centered, const IntegrationConfig& config) {
    if (order < 1) {
        throw ConfigError("moment order must be >= 1, got " + std::to_string(order));
    }
    arms.validate(table);

    const auto treated = EmpiricalCdf::from_arm(table, arms.treated, centered);
    const auto control = EmpiricalCdf::from_arm(table, arms.control, centered);
    const auto resolved = resolve(table, centered, config, order);
    const auto integrand =
        make_moment_bounds_integrand(cdf_fn(treated), cdf_fn(control), order);
    auto estimate = from_pair(integrate_multi(integrand, 2, resolved));
    if (order % 2 == 0) estimate.flags.push_back("upper_bound_sharp");
    return reconcile_interval(std::move(estimate));
}

IntervalEstimate product_bounds(const ObservationTable& table, ArmPair left, ArmPair right,
                                bool centered, const IntegrationConfig& config) {
    left.validate(table);
    right.validate(table);
    if (config.dimension != 2) {
        throw ConfigError("product bounds integrate over two axes; config dimension is " +
                          std::to_string(config.dimension));
    }

    std::map<int, EmpiricalCdf> cdfs;
    for (int arm : {left.treated, left.control, right.treated, right.control}) {
        if (cdfs.count(arm) == 0) {
            cdfs.emplace(arm, EmpiricalCdf::from_arm(table, arm, centered));
        }
    }
    const auto resolved = resolve(table, centered, config, 2);
    const auto integrand = make_product_bounds_integrand(
        cdf_fn(cdfs.at(left.treated)), cdf_fn(cdfs.at(left.control)),
        cdf_fn(cdfs.at(right.treated)), cdf_fn(cdfs.at(right.control)));
    return reconcile_interval(from_pair(integrate_multi(integrand, 2, resolved)));
}

IntervalEstimate skewness_bounds(const ObservationTable& table, ArmPair arms,
                                 const IntegrationConfig& config) {
    const auto m2 = moment_bounds(table, 2, arms, /*centered=*/true, config);
    const auto m3 = moment_bounds(table, 3, arms, /*centered=*/true, config);

    IntervalEstimate out;
    const double lower_denom = guard_denominator(
        std::pow(m3.interval.lower >= 0.0 ? m2.interval.upper : m2.interval.lower, 1.5),
        out.flags);
    const double upper_denom = guard_denominator(
        std::pow(m3.interval.upper >= 0.0 ? m2.interval.lower : m2.interval.upper, 1.5),
        out.flags);
    out.interval = Interval{m3.interval.lower / lower_denom, m3.interval.upper / upper_denom};
    return reconcile_interval(std::move(out));
}

IntervalEstimate kurtosis_bounds(const ObservationTable& table, ArmPair arms,
                                 const IntegrationConfig& config) {
    const auto m2 = moment_bounds(table, 2, arms, /*centered=*/true, config);
    const auto m4 = moment_bounds(table, 4, arms, /*centered=*/true, config);

    IntervalEstimate out;
    const double lower_denom =
        guard_denominator(m2.interval.upper * m2.interval.upper, out.flags);
    const double upper_denom =
        guard_denominator(m2.interval.lower * m2.interval.lower, out.flags);
    out.interval = Interval{m4.interval.lower / lower_denom, m4.interval.upper / upper_denom};
    return reconcile_interval(std::move(out));
}

IntervalEstimate correlation_bounds(const ObservationTable& table, ArmPair left, ArmPair right,
                                    const IntegrationConfig& config) {
    const auto covariance = product_bounds(table, left, right, /*centered=*/true, config);
    const auto var_left = moment_bounds(table, 2, left, /*centered=*/true, config);
    const auto var_right = moment_bounds(table, 2, right, /*centered=*/true, config);

    IntervalEstimate out;
    const double lower_denom = guard_denominator(
        covariance.interval.lower >= 0.0
            ? std::sqrt(var_left.interval.upper) * std::sqrt(var_right.interval.upper)
            : std::sqrt(var_left.interval.lower) * std::sqrt(var_right.interval.lower),
        out.flags);
    const double upper_denom = guard_denominator(
        covariance.interval.upper >= 0.0
            ? std::sqrt(var_left.interval.lower) * std::sqrt(var_right.interval.lower)
            : std::sqrt(var_left.interval.upper) * std::sqrt(var_right.interval.upper),
        out.flags);
    double lower = covariance.interval.lower / lower_denom;
    double upper = covariance.interval.upper / upper_denom;
    if (lower < -1.0 || upper > 1.0) {
        out.flags.push_back("clipped_to_unit_interval");
    }
    out.interval = Interval{std::clamp(lower, -1.0, 1.0), std::clamp(upper, -1.0, 1.0)};
    return reconcile_interval(std::move(out));
}

IntervalEstimate reconcile_interval(IntervalEstimate estimate) {
    if (estimate.interval.lower <= estimate.interval.upper) return estimate;
    const double inversion = estimate.interval.lower - estimate.interval.upper;
    const double tolerance =
        3.0 * (estimate.lower_std_error + estimate.upper_std_error);
    if (inversion > tolerance) {
        throw EstimationError("bound interval inverted by " + std::to_string(inversion) +
                              ", beyond Monte Carlo noise (tolerance " +
                              std::to_string(tolerance) + "); increase integration points");
    }
    std::swap(estimate.interval.lower, estimate.interval.upper);
    estimate.flags.push_back("interval_swapped");
    return estimate;
}

} // namespace causalmoments
