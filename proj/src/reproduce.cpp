#include "causalmoments/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "causalmoments/empirical_cdf.hpp"
#include "causalmoments/identify.hpp"
#include "causalmoments/integrands.hpp"
#include "causalmoments/parallel.hpp"
#include "causalmoments/rng.hpp"
#include "causalmoments/scm.hpp"

namespace causalmoments {

namespace {

constexpr std::uint64_t kScmAStream = 0xA0;
constexpr std::uint64_t kScmBStream = 0xB0;
constexpr std::uint64_t kMcStream = 0x4d43;

double nearest_rank(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

ReproduceCell summarize(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    ReproduceCell cell;
    cell.mean = sum / static_cast<double>(values.size());
    cell.p2_5 = nearest_rank(values, 0.025);
    cell.p97_5 = nearest_rank(values, 0.975);
    return cell;
}

std::string format_cell(const ReproduceCell& cell) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << cell.mean << " ([" << cell.p2_5 << ", " << cell.p97_5 << "])";
    return out.str();
}

} // namespace

ReproduceResult run_reproduction(const ReproduceOptions& options) {
    ReproduceResult result;
    result.options = options;

    IntegrationConfig base;
    base.mode = McMode::Joint;

    auto config_for = [&](int dimension, std::uint64_t mc_seed) {
        IntegrationConfig config = base.with_dimension(dimension);
        config.joint_points =
            dimension <= 2 ? options.mc_points_low : options.mc_points_high;
        config.seed = mc_seed;
        return config;
    };

    if (options.include_scm_a) {
        const auto spec = preset("scm-a");
        const ArmPair arms{1, 0};
        const std::vector<int> orders = {2, 3, 4};
        const std::vector<double> truths = {1.0 / 3.0, -0.25, 0.2};

        // rows: per order (identified, upper, lower)
        std::vector<ReproduceRow> rows;
        for (std::size_t o = 0; o < orders.size(); ++o) {
            const std::string m = std::to_string(orders[o]);
            rows.push_back({"moment_m" + m, truths[o], {}});
            rows.push_back({"moment_m" + m + "_upper", std::nullopt, {}});
            rows.push_back({"moment_m" + m + "_lower", std::nullopt, {}});
        }

        for (std::int64_t n : options.sample_sizes) {
            const std::uint64_t size_seed =
                derive_seed(derive_seed(options.seed, kScmAStream), static_cast<std::uint64_t>(n));
            std::vector<std::vector<double>> values(
                rows.size(), std::vector<double>(static_cast<std::size_t>(options.replications)));
            parallel_for(static_cast<std::size_t>(options.replications), [&](std::size_t r) {
                const std::uint64_t data_seed = derive_seed(size_seed, r);
                const std::uint64_t mc_seed = derive_seed(data_seed, kMcStream);
                const auto table = simulate(spec, n, data_seed);
                const auto treated = EmpiricalCdf::from_arm(table, arms.treated, false);
                const auto control = EmpiricalCdf::from_arm(table, arms.control, false);
                const auto bounds = domain_bounds(table, false);
                for (std::size_t o = 0; o < orders.size(); ++o) {
                    // One pass per order: plug-in and both bounds share the
                    // CDF evaluations and the draws.
                    const auto config = config_for(orders[o], mc_seed).with_bounds(bounds);
                    const auto estimates = integrate_multi(
                        make_moment_combined_integrand(cdf_fn(treated), cdf_fn(control),
                                                       orders[o]),
                        3, config);
                    values[3 * o + 0][r] = estimates[0].value;
                    values[3 * o + 1][r] = estimates[2].value;
                    values[3 * o + 2][r] = estimates[1].value;
                }
            });
            for (std::size_t row = 0; row < rows.size(); ++row) {
                rows[row].by_size[n] = summarize(values[row]);
            }
        }
        result.scm_a_rows = std::move(rows);
    }

    if (options.include_scm_b) {
        const auto spec = preset("scm-b");
        const ArmPair left{1, 0};
        const ArmPair right{0, -1};

        std::vector<ReproduceRow> rows = {
            {"product", -1.0 / 3.0, {}},
            {"product_upper", std::nullopt, {}},
            {"product_lower", std::nullopt, {}},
        };

        for (std::int64_t n : options.sample_sizes) {
            const std::uint64_t size_seed =
                derive_seed(derive_seed(options.seed, kScmBStream), static_cast<std::uint64_t>(n));
            std::vector<std::vector<double>> values(
                rows.size(), std::vector<double>(static_cast<std::size_t>(options.replications)));
            parallel_for(static_cast<std::size_t>(options.replications), [&](std::size_t r) {
                const std::uint64_t data_seed = derive_seed(size_seed, r);
                const std::uint64_t mc_seed = derive_seed(data_seed, kMcStream);
                const auto table = simulate(spec, n, data_seed);
                const auto fi = EmpiricalCdf::from_arm(table, left.treated, false);
                const auto fj = EmpiricalCdf::from_arm(table, left.control, false);
                const auto fk = EmpiricalCdf::from_arm(table, right.treated, false);
                const auto fh = EmpiricalCdf::from_arm(table, right.control, false);
                const auto config =
                    config_for(2, mc_seed).with_bounds(domain_bounds(table, false));
                const auto estimates = integrate_multi(
                    make_product_combined_integrand(cdf_fn(fi), cdf_fn(fj), cdf_fn(fk),
                                                    cdf_fn(fh)),
                    3, config);
                values[0][r] = estimates[0].value;
                values[1][r] = estimates[2].value;
                values[2][r] = estimates[1].value;
            });
            for (std::size_t row = 0; row < rows.size(); ++row) {
                rows[row].by_size[n] = summarize(values[row]);
            }
        }
        result.scm_b_rows = std::move(rows);
    }

    return result;
}

nlohmann::json reproduce_to_json(const ReproduceResult& result) {
    nlohmann::json j;
    j["options"] = {
        {"replications", result.options.replications},
        {"sample_sizes", result.options.sample_sizes},
        {"seed", result.options.seed},
        {"mc_points_low", result.options.mc_points_low},
        {"mc_points_high", result.options.mc_points_high},
    };
    auto rows_to_json = [](const std::vector<ReproduceRow>& rows) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json cells = nlohmann::json::object();
            for (const auto& [n, cell] : row.by_size) {
                cells[std::to_string(n)] = {
                    {"mean", cell.mean}, {"p2_5", cell.p2_5}, {"p97_5", cell.p97_5}};
            }
            out.push_back({{"estimator", row.estimator},
                           {"ground_truth", row.ground_truth
                                                ? nlohmann::json(*row.ground_truth)
                                                : nlohmann::json(nullptr)},
                           {"cells", cells}});
        }
        return out;
    };
    j["scm_a"] = rows_to_json(result.scm_a_rows);
    j["scm_b"] = rows_to_json(result.scm_b_rows);
    return j;
}

std::string reproduce_to_table(const ReproduceResult& result) {
    std::ostringstream out;
    auto render = [&](const std::string& title, const std::vector<ReproduceRow>& rows) {
        if (rows.empty()) return;
        out << title << " (replications=" << result.options.replications << ")\n";
        out << std::left << std::setw(22) << "estimator";
        for (const auto& [n, cell] : rows.front().by_size) {
            out << std::setw(26) << ("N=" + std::to_string(n));
        }
        out << "ground truth\n";
        for (const auto& row : rows) {
            out << std::left << std::setw(22) << row.estimator;
            for (const auto& [n, cell] : row.by_size) {
                out << std::setw(26) << format_cell(cell);
            }
            if (row.ground_truth) {
                out << std::fixed << std::setprecision(3) << *row.ground_truth;
            } else {
                out << "-";
            }
            out << "\n";
        }
        out << "\n";
    };
    render("model A", result.scm_a_rows);
    render("model B", result.scm_b_rows);
    return out.str();
}

} // namespace causalmoments
