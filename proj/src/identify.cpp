#include "causalmoments/identify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "causalmoments/empirical_cdf.hpp"
#include "causalmoments/errors.hpp"
#include "causalmoments/integrands.hpp"

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

void require_order(int order) {
    if (order < 1) {
        throw ConfigError("moment order must be >= 1, got " + std::to_string(order));
    }
}

std::map<int, EmpiricalCdf> build_cdfs(const ObservationTable& table,
                                       std::initializer_list<int> arms, bool centered) {
    std::map<int, EmpiricalCdf> cdfs;
    for (int arm : arms) {
        if (cdfs.count(arm) == 0) {
            cdfs.emplace(arm, EmpiricalCdf::from_arm(table, arm, centered));
        }
    }
    return cdfs;
}

double guard_denominator(double denom, std::vector<std::string>& flags) {
    if (denom < kDenominatorGuard) {
        flags.push_back("denominator_guarded");
        return kDenominatorGuard;
    }
    return denom;
}

} // namespace

void ArmPair::validate(const ObservationTable& table) const {
    if (treated == control) {
        throw ValidationError("arm pair must contrast two distinct arms, got (" +
                              std::to_string(treated) + ", " + std::to_string(control) + ")");
    }
    if (!table.has_arm(treated)) {
        throw NoDataError("no observations for arm " + std::to_string(treated));
    }
    if (!table.has_arm(control)) {
        throw NoDataError("no observations for arm " + std::to_string(control));
    }
}

double ate(const ObservationTable& table, ArmPair arms) {
    arms.validate(table);
    return conditional_mean(table, arms.treated) - conditional_mean(table, arms.control);
}

ScalarEstimate moment_identified(const ObservationTable& table, const MomentRequest& request) {
    require_order(request.order);
    request.arms.validate(table);

    const auto cdfs = build_cdfs(table, {request.arms.treated, request.arms.control},
                                 request.centered);
    const auto config = resolve(table, request.centered, request.config, request.order);
    const auto integrand =
        make_moment_plugin_integrand(cdf_fn(cdfs.at(request.arms.treated)),
                                     cdf_fn(cdfs.at(request.arms.control)), request.order);
    const auto estimate = integrate(integrand, config);
    return ScalarEstimate{estimate.value, estimate.std_error, {}};
}

ScalarEstimate central_moment_identified(const ObservationTable& table, MomentRequest request) {
    request.centered = true;
    return moment_identified(table, request);
}

ScalarEstimate product_moment_identified(const ObservationTable& table, ArmPair left,
                                         ArmPair right, const IntegrationConfig& config,
                                         bool centered) {
    left.validate(table);
    right.validate(table);
    if (config.dimension != 2) {
        throw ConfigError("product moments integrate over two axes; config dimension is " +
                          std::to_string(config.dimension));
    }

    const auto cdfs =
        build_cdfs(table, {left.treated, left.control, right.treated, right.control}, centered);
    const auto resolved = resolve(table, centered, config, 2);
    const auto integrand = make_product_plugin_integrand(
        cdf_fn(cdfs.at(left.treated)), cdf_fn(cdfs.at(left.control)),
        cdf_fn(cdfs.at(right.treated)), cdf_fn(cdfs.at(right.control)));
    const auto estimate = integrate(integrand, resolved);
    return ScalarEstimate{estimate.value, estimate.std_error, {}};
}

ScalarEstimate central_product_moment_identified(const ObservationTable& table, ArmPair left,
                                                 ArmPair right,
                                                 const IntegrationConfig& config) {
    return product_moment_identified(table, left, right, config, /*centered=*/true);
}

ScalarEstimate correlation_identified(const ObservationTable& table, ArmPair left,
                                      ArmPair right, const IntegrationConfig& config) {
    const auto covariance = central_product_moment_identified(table, left, right, config);

    auto second_central = [&](ArmPair arms) {
        MomentRequest request{2, arms, true, config};
        return central_moment_identified(table, request);
    };
    const auto var_left = second_central(left);
    const auto var_right = second_central(right);

    ScalarEstimate result;
    result.mc_std_error = covariance.mc_std_error;
    if (var_left.value < 0.0 || var_right.value < 0.0) {
        result.flags.push_back("variance_clipped_to_zero");
    }
    const double denom = guard_denominator(
        std::sqrt(std::max(var_left.value, 0.0)) * std::sqrt(std::max(var_right.value, 0.0)),
        result.flags);
    result.value = covariance.value / denom;
    if (result.value > 1.0 || result.value < -1.0) {
        result.value = std::clamp(result.value, -1.0, 1.0);
        result.flags.push_back("clipped_to_unit_interval");
    }
    return result;
}

DerivedStats derived_stats(const ObservationTable& table, ArmPair arms,
                           const IntegrationConfig& config) {
    DerivedStats stats;
    auto central = [&](int order) {
        MomentRequest request{order, arms, true, config};
        return central_moment_identified(table, request);
    };
    stats.central_m2 = central(2);
    stats.central_m3 = central(3);
    stats.central_m4 = central(4);

    stats.variance = stats.central_m2.value;
    if (stats.variance < 0.0) {
        stats.variance = 0.0;
        stats.flags.push_back("variance_clipped_to_zero");
    }
    stats.std_dev = std::sqrt(stats.variance);

    const double skew_denom = guard_denominator(std::pow(stats.variance, 1.5), stats.flags);
    stats.skewness = stats.central_m3.value / skew_denom;
    const double kurt_denom = guard_denominator(stats.variance * stats.variance, stats.flags);
    stats.kurtosis = stats.central_m4.value / kurt_denom;
    return stats;
}

} // namespace causalmoments
