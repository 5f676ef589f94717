#include "causalmoments/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "causalmoments/errors.hpp"

namespace causalmoments {

double exact_arm_mean(const DiscreteScm& scm, int arm) {
    const auto a = scm.arm_index(arm);
    double mean = 0.0;
    for (std::size_t t = 0; t < scm.support.size(); ++t) {
        mean += scm.support[t].second * scm.outcomes[a][t];
    }
    return mean;
}

double exact_moment(const DiscreteScm& scm, ArmPair arms, int order, bool centered) {
    if (order < 1) throw ConfigError("moment order must be >= 1");
    const auto i = scm.arm_index(arms.treated);
    const auto j = scm.arm_index(arms.control);
    const double shift =
        centered ? exact_arm_mean(scm, arms.treated) - exact_arm_mean(scm, arms.control) : 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t < scm.support.size(); ++t) {
        const double effect = scm.outcomes[i][t] - scm.outcomes[j][t] - shift;
        total += scm.support[t].second * std::pow(effect, order);
    }
    return total;
}

double exact_product_moment(const DiscreteScm& scm, ArmPair left, ArmPair right,
                            bool centered) {
    const auto i = scm.arm_index(left.treated);
    const auto j = scm.arm_index(left.control);
    const auto k = scm.arm_index(right.treated);
    const auto h = scm.arm_index(right.control);
    const double shift_left =
        centered ? exact_arm_mean(scm, left.treated) - exact_arm_mean(scm, left.control) : 0.0;
    const double shift_right =
        centered ? exact_arm_mean(scm, right.treated) - exact_arm_mean(scm, right.control)
                 : 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t < scm.support.size(); ++t) {
        const double effect_left = scm.outcomes[i][t] - scm.outcomes[j][t] - shift_left;
        const double effect_right = scm.outcomes[k][t] - scm.outcomes[h][t] - shift_right;
        total += scm.support[t].second * effect_left * effect_right;
    }
    return total;
}

CdfFn exact_cdf(const DiscreteScm& scm, int arm, bool centered) {
    const auto a = scm.arm_index(arm);
    const double center = centered ? exact_arm_mean(scm, arm) : 0.0;

    std::vector<std::pair<double, double>> atoms; // (outcome, probability)
    for (std::size_t t = 0; t < scm.support.size(); ++t) {
        atoms.emplace_back(scm.outcomes[a][t] - center, scm.support[t].second);
    }
    std::sort(atoms.begin(), atoms.end());
    std::vector<double> values;
    std::vector<double> cumulative; // P(Y <= values[t])
    double mass = 0.0;
    for (const auto& [value, p] : atoms) {
        mass += p;
        if (!values.empty() && values.back() == value) {
            cumulative.back() = mass;
        } else {
            values.push_back(value);
            cumulative.push_back(mass);
        }
    }
    cumulative.back() = 1.0;
    return [values = std::move(values), cumulative = std::move(cumulative)](double y) {
        // First atom >= y; everything before it lies strictly below y.
        const auto idx = static_cast<std::size_t>(
            std::lower_bound(values.begin(), values.end(), y) - values.begin());
        return idx == 0 ? 0.0 : cumulative[idx - 1];
    };
}

std::vector<double> outcome_mesh(const DiscreteScm& scm, bool centered) {
    std::vector<double> values;
    for (std::size_t a = 0; a < scm.arms.size(); ++a) {
        const double center = centered ? exact_arm_mean(scm, scm.arms[a]) : 0.0;
        for (double y : scm.outcomes[a]) values.push_back(y - center);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

double mesh_integrate(const Integrand& integrand, const std::vector<double>& mesh,
                      int dimension) {
    if (dimension < 1) throw ConfigError("integration dimension must be >= 1");
    if (mesh.size() < 2) return 0.0; // zero-volume domain

    const std::size_t cells = mesh.size() - 1;
    std::vector<double> midpoints(cells);
    std::vector<double> widths(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        midpoints[c] = 0.5 * (mesh[c] + mesh[c + 1]);
        widths[c] = mesh[c + 1] - mesh[c];
    }

    std::vector<std::size_t> index(static_cast<std::size_t>(dimension), 0);
    std::vector<double> point(static_cast<std::size_t>(dimension));
    double total = 0.0;
    while (true) {
        double volume = 1.0;
        for (int d = 0; d < dimension; ++d) {
            point[static_cast<std::size_t>(d)] = midpoints[index[static_cast<std::size_t>(d)]];
            volume *= widths[index[static_cast<std::size_t>(d)]];
        }
        total += volume * integrand(point);
        int d = dimension - 1;
        for (; d >= 0; --d) {
            auto& i = index[static_cast<std::size_t>(d)];
            if (++i < cells) break;
            i = 0;
        }
        if (d < 0) break;
    }
    return total;
}

double exact_plugin_moment(const DiscreteScm& scm, ArmPair arms, int order, bool centered) {
    const auto integrand = make_moment_plugin_integrand(
        exact_cdf(scm, arms.treated, centered), exact_cdf(scm, arms.control, centered), order);
    return mesh_integrate(integrand, outcome_mesh(scm, centered), order);
}

double exact_plugin_product(const DiscreteScm& scm, ArmPair left, ArmPair right,
                            bool centered) {
    const auto integrand = make_product_plugin_integrand(
        exact_cdf(scm, left.treated, centered), exact_cdf(scm, left.control, centered),
        exact_cdf(scm, right.treated, centered), exact_cdf(scm, right.control, centered));
    return mesh_integrate(integrand, outcome_mesh(scm, centered), 2);
}

Interval exact_moment_bound_interval(const DiscreteScm& scm, ArmPair arms, int order,
                                     bool centered) {
    auto bounds_integrand = make_moment_bounds_integrand(
        exact_cdf(scm, arms.treated, centered), exact_cdf(scm, arms.control, centered), order);
    const auto mesh = outcome_mesh(scm, centered);
    std::vector<double> out(2);
    const auto lower = mesh_integrate(
        [&](std::span<const double> point) {
            bounds_integrand(point, out);
            return out[0];
        },
        mesh, order);
    const auto upper = mesh_integrate(
        [&](std::span<const double> point) {
            bounds_integrand(point, out);
            return out[1];
        },
        mesh, order);
    return Interval{lower, upper};
}

Interval exact_product_bound_interval(const DiscreteScm& scm, ArmPair left, ArmPair right,
                                      bool centered) {
    auto bounds_integrand = make_product_bounds_integrand(
        exact_cdf(scm, left.treated, centered), exact_cdf(scm, left.control, centered),
        exact_cdf(scm, right.treated, centered), exact_cdf(scm, right.control, centered));
    const auto mesh = outcome_mesh(scm, centered);
    std::vector<double> out(2);
    const auto lower = mesh_integrate(
        [&](std::span<const double> point) {
            bounds_integrand(point, out);
            return out[0];
        },
        mesh, 2);
    const auto upper = mesh_integrate(
        [&](std::span<const double> point) {
            bounds_integrand(point, out);
            return out[1];
        },
        mesh, 2);
    return Interval{lower, upper};
}

} // namespace causalmoments
