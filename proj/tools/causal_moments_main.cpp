#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "causalmoments/bootstrap.hpp"
#include "causalmoments/bounds.hpp"
#include "causalmoments/conditional.hpp"
#include "causalmoments/errors.hpp"
#include "causalmoments/identify.hpp"
#include "causalmoments/report.hpp"
#include "causalmoments/reproduce.hpp"
#include "causalmoments/scm.hpp"

namespace cm = causalmoments;

namespace {

struct SharedOptions {
    std::string input;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::int64_t mc_points = 0;
    std::string mc_mode = "joint";
    bool allow_high_dim_tensor = false;
    std::vector<double> bounds_override;
    std::string condition_on;
    int bootstrap = 0;
    double level = 0.95;
    std::string resample = "pooled";
};

void add_shared_flags(CLI::App* cmd, SharedOptions& opt, bool needs_input) {
    auto* input = cmd->add_option("--input", opt.input, "input CSV (columns x,y[,w])");
    if (needs_input) input->required();
    cmd->add_option("--output", opt.output, "write results to this file instead of stdout");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--seed", opt.seed, "seed for all random streams");
    cmd->add_option("--mc-points", opt.mc_points,
                    "integration points (joint count or tensor per-axis count); 0 = default")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--mc-mode", opt.mc_mode, "integration mode")
        ->check(CLI::IsMember({"joint", "tensor"}));
    cmd->add_flag("--allow-high-dim-tensor", opt.allow_high_dim_tensor,
                  "opt into tensor grids beyond two dimensions");
    cmd->add_option("--bounds-override", opt.bounds_override,
                    "integration bounds a,b instead of data-derived bounds")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--condition-on", opt.condition_on,
                    "restrict to one covariate stratum, e.g. w=1");
    cmd->add_option("--bootstrap", opt.bootstrap, "bootstrap replicates (0 = off)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--level", opt.level, "bootstrap confidence level");
    cmd->add_option("--resample", opt.resample, "bootstrap resampling scheme")
        ->check(CLI::IsMember({"pooled", "within-arm"}));
}

cm::ArmPair parse_arm_pair(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw cm::ConfigError(flag + " expects two arm labels i,j; got '" + text + "'");
    }
    try {
        return cm::ArmPair{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw cm::ConfigError(flag + " expects two integer arm labels; got '" + text + "'");
    }
}

int parse_condition(const std::string& text) {
    std::string value = text;
    if (const auto eq = text.find('='); eq != std::string::npos) value = text.substr(eq + 1);
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw cm::ConfigError("--condition-on expects w=<integer>, got '" + text + "'");
    }
}

cm::IntegrationConfig base_config(const SharedOptions& opt) {
    cm::IntegrationConfig config;
    config.mode = opt.mc_mode == "tensor" ? cm::McMode::Tensor : cm::McMode::Joint;
    config.seed = opt.seed;
    config.allow_high_dim_tensor = opt.allow_high_dim_tensor;
    if (config.mode == cm::McMode::Joint) {
        config.joint_points = opt.mc_points;
    } else if (opt.mc_points > 0) {
        config.points_per_axis = {opt.mc_points};
    }
    if (!opt.bounds_override.empty()) {
        cm::DomainBounds bounds{opt.bounds_override[0], opt.bounds_override[1]};
        bounds.validate();
        config.bounds = bounds;
    }
    return config;
}

nlohmann::json manifest_json(const std::string& subcommand, const SharedOptions& opt) {
    return nlohmann::json{
        {"subcommand", subcommand},
        {"input", opt.input},
        {"format", opt.format},
        {"seed", opt.seed},
        {"mc_points", opt.mc_points},
        {"mc_mode", opt.mc_mode},
        {"allow_high_dim_tensor", opt.allow_high_dim_tensor},
        {"bounds_override", opt.bounds_override},
        {"condition_on", opt.condition_on},
        {"bootstrap", opt.bootstrap},
        {"level", opt.level},
        {"resample", opt.resample},
    };
}

void write_output(const SharedOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw cm::ConfigError("cannot open output file '" + opt.output + "'");
    file << text;
}

struct RunContext {
    SharedOptions opt;
    cm::ObservationTable table;
    cm::IntegrationConfig config;
    nlohmann::json manifest;
    std::vector<cm::Report> reports;
    std::vector<std::pair<std::string, std::string>> errors; // (quantity, message)

    cm::BootstrapConfig bootstrap_config() const {
        cm::BootstrapConfig config;
        config.replicates = opt.bootstrap;
        config.level = opt.level;
        config.seed = opt.seed;
        config.mode = opt.resample == "within-arm" ? cm::ResampleMode::WithinArm
                                                   : cm::ResampleMode::Pooled;
        return config;
    }

    cm::CiBlock ci_from(const cm::BootstrapResult& r) const {
        return cm::CiBlock{r.lower, r.upper, opt.level, r.mean};
    }

    // Runs `make_report` and files either the report or an error entry.
    void run(const std::string& quantity, const std::function<cm::Report()>& make_report) {
        try {
            reports.push_back(make_report());
        } catch (const std::exception& e) {
            errors.emplace_back(quantity, e.what());
        }
    }

    int emit() {
        nlohmann::json out;
        out["manifest"] = manifest;
        out["reports"] = nlohmann::json::array();
        for (const auto& report : reports) out["reports"].push_back(cm::to_json(report));
        out["errors"] = nlohmann::json::array();
        for (const auto& [quantity, message] : errors) {
            out["errors"].push_back({{"quantity", quantity}, {"message", message}});
        }
        if (opt.format == "json") {
            write_output(opt, out.dump(2) + "\n");
        } else {
            std::ostringstream text;
            for (const auto& report : reports) text << cm::to_table_line(report) << "\n";
            for (const auto& [quantity, message] : errors) {
                text << quantity << "  error: " << message << "\n";
            }
            write_output(opt, text.str());
        }
        return errors.empty() ? 0 : 1;
    }
};

RunContext make_context(const std::string& subcommand, const SharedOptions& opt) {
    RunContext ctx;
    ctx.opt = opt;
    if (!(opt.level > 0.0 && opt.level < 1.0)) {
        throw cm::ConfigError("--level must lie in (0, 1)");
    }
    ctx.table = cm::ingest_csv(opt.input);
    if (!opt.condition_on.empty()) {
        ctx.table = cm::stratify(ctx.table, parse_condition(opt.condition_on));
    }
    ctx.config = base_config(opt);
    ctx.manifest = manifest_json(subcommand, opt);
    return ctx;
}

std::vector<int> pair_labels(cm::ArmPair arms) { return {arms.treated, arms.control}; }

std::vector<int> pair_labels(cm::ArmPair left, cm::ArmPair right) {
    return {left.treated, left.control, right.treated, right.control};
}

// Point-estimate report with an optional percentile bootstrap around the
// same estimator.
cm::Report scalar_report(RunContext& ctx, const std::string& quantity, std::vector<int> arms,
                         std::optional<int> order,
                         const std::function<cm::ScalarEstimate(
                             const cm::ObservationTable&, const cm::IntegrationConfig&)>& f) {
    cm::Report report;
    report.quantity = quantity;
    report.arms = std::move(arms);
    report.order = order;
    report.config = ctx.manifest;
    const auto point = f(ctx.table, ctx.config);
    report.estimate = point.value;
    report.mc_std_error = point.mc_std_error;
    report.flags = point.flags;
    if (ctx.opt.bootstrap > 0) {
        const auto bs = cm::bootstrap_ci(
            [&](const cm::ObservationTable& t, std::uint64_t mc_seed) {
                cm::IntegrationConfig config = ctx.config;
                config.seed = mc_seed;
                return f(t, config).value;
            },
            ctx.table, ctx.bootstrap_config());
        report.ci = ctx.ci_from(bs);
        for (const auto& flag : bs.flags) report.flags.push_back(flag);
    }
    return report;
}

// Interval report; under bootstrap each side is resampled with the same
// replicate tables (same bootstrap seed).
cm::Report interval_report(RunContext& ctx, const std::string& quantity, std::vector<int> arms,
                           std::optional<int> order,
                           const std::function<cm::IntervalEstimate(
                               const cm::ObservationTable&, const cm::IntegrationConfig&)>& f) {
    cm::Report report;
    report.quantity = quantity;
    report.arms = std::move(arms);
    report.order = order;
    report.config = ctx.manifest;
    const auto interval = f(ctx.table, ctx.config);
    report.interval = interval.interval;
    report.flags = interval.flags;
    if (ctx.opt.bootstrap > 0) {
        auto side = [&](bool upper) {
            return cm::bootstrap_ci(
                [&, upper](const cm::ObservationTable& t, std::uint64_t mc_seed) {
                    cm::IntegrationConfig config = ctx.config;
                    config.seed = mc_seed;
                    const auto est = f(t, config);
                    return upper ? est.interval.upper : est.interval.lower;
                },
                ctx.table, ctx.bootstrap_config());
        };
        const auto lower = side(false);
        const auto upper = side(true);
        report.ci_lower = ctx.ci_from(lower);
        report.ci_upper = ctx.ci_from(upper);
        for (const auto& flag : lower.flags) report.flags.push_back(flag);
    }
    return report;
}

struct EstimateArgs {
    bool want_ate = false;
    std::vector<int> moments;
    std::vector<int> central_moments;
    bool want_product = false;
    bool want_central_product = false;
    bool want_correlation = false;
    bool want_derived = false;
    std::string arms = "1,0";
    std::string arms_left = "1,0";
    std::string arms_right = "1,0";
};

int run_estimate(const SharedOptions& opt, const EstimateArgs& args) {
    auto ctx = make_context("estimate", opt);
    const auto arms = parse_arm_pair(args.arms, "--arms");
    const auto left = parse_arm_pair(args.arms_left, "--arms-left");
    const auto right = parse_arm_pair(args.arms_right, "--arms-right");

    if (args.want_ate) {
        ctx.run("ate", [&] {
            return scalar_report(ctx, "ate", pair_labels(arms), std::nullopt,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig&) {
                                     return cm::ScalarEstimate{cm::ate(t, arms), 0.0, {}};
                                 });
        });
    }
    for (int m : args.moments) {
        ctx.run("moment", [&] {
            return scalar_report(ctx, "moment", pair_labels(arms), m,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig& config) {
                                     return cm::moment_identified(t, {m, arms, false, config});
                                 });
        });
    }
    for (int m : args.central_moments) {
        ctx.run("central_moment", [&] {
            return scalar_report(ctx, "central_moment", pair_labels(arms), m,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig& config) {
                                     return cm::moment_identified(t, {m, arms, true, config});
                                 });
        });
    }
    if (args.want_product) {
        ctx.run("product_moment", [&] {
            return scalar_report(ctx, "product_moment", pair_labels(left, right), std::nullopt,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig& config) {
                                     return cm::product_moment_identified(
                                         t, left, right, config.with_dimension(2), false);
                                 });
        });
    }
    if (args.want_central_product) {
        ctx.run("central_product_moment", [&] {
            return scalar_report(ctx, "central_product_moment", pair_labels(left, right),
                                 std::nullopt,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig& config) {
                                     return cm::central_product_moment_identified(
                                         t, left, right, config.with_dimension(2));
                                 });
        });
    }
    if (args.want_correlation) {
        ctx.run("correlation", [&] {
            return scalar_report(ctx, "correlation", pair_labels(left, right), std::nullopt,
                                 [&](const cm::ObservationTable& t,
                                     const cm::IntegrationConfig& config) {
                                     return cm::correlation_identified(
                                         t, left, right, config.with_dimension(2));
                                 });
        });
    }
    if (args.want_derived) {
        struct Item {
            const char* name;
            double cm::DerivedStats::*field;
        };
        for (const auto& item : {Item{"variance", &cm::DerivedStats::variance},
                                 Item{"std_dev", &cm::DerivedStats::std_dev},
                                 Item{"skewness", &cm::DerivedStats::skewness},
                                 Item{"kurtosis", &cm::DerivedStats::kurtosis}}) {
            ctx.run(item.name, [&] {
                return scalar_report(
                    ctx, item.name, pair_labels(arms), std::nullopt,
                    [&](const cm::ObservationTable& t, const cm::IntegrationConfig& config) {
                        const auto stats = cm::derived_stats(t, arms, config);
                        return cm::ScalarEstimate{stats.*(item.field), 0.0, stats.flags};
                    });
            });
        }
    }
    if (ctx.reports.empty() && ctx.errors.empty()) {
        throw cm::ConfigError("no quantity requested; pass --ate, --moment, --product, ...");
    }
    return ctx.emit();
}

struct BoundsArgs {
    std::vector<int> moments;
    std::vector<int> central_moments;
    bool want_product = false;
    bool want_central_product = false;
    bool want_skewness = false;
    bool want_kurtosis = false;
    bool want_correlation = false;
    std::string arms = "1,0";
    std::string arms_left = "1,0";
    std::string arms_right = "1,0";
};

int run_bounds(const SharedOptions& opt, const BoundsArgs& args) {
    auto ctx = make_context("bounds", opt);
    const auto arms = parse_arm_pair(args.arms, "--arms");
    const auto left = parse_arm_pair(args.arms_left, "--arms-left");
    const auto right = parse_arm_pair(args.arms_right, "--arms-right");

    auto moment_interval = [&](int m, bool centered) {
        const std::string quantity =
            centered ? "central_moment_bounds" : "moment_bounds";
        ctx.run(quantity, [&] {
            return interval_report(ctx, quantity, pair_labels(arms), m,
                                   [&, m, centered](const cm::ObservationTable& t,
                                                    const cm::IntegrationConfig& config) {
                                       return cm::moment_bounds(t, m, arms, centered, config);
                                   });
        });
    };
    for (int m : args.moments) moment_interval(m, false);
    for (int m : args.central_moments) moment_interval(m, true);

    if (args.want_product) {
        ctx.run("product_bounds", [&] {
            return interval_report(ctx, "product_bounds", pair_labels(left, right),
                                   std::nullopt,
                                   [&](const cm::ObservationTable& t,
                                       const cm::IntegrationConfig& config) {
                                       return cm::product_bounds(t, left, right, false,
                                                                 config.with_dimension(2));
                                   });
        });
    }
    if (args.want_central_product) {
        ctx.run("covariance_bounds", [&] {
            return interval_report(ctx, "covariance_bounds", pair_labels(left, right),
                                   std::nullopt,
                                   [&](const cm::ObservationTable& t,
                                       const cm::IntegrationConfig& config) {
                                       return cm::product_bounds(t, left, right, true,
                                                                 config.with_dimension(2));
                                   });
        });
    }
    if (args.want_skewness) {
        ctx.run("skewness_bounds", [&] {
            return interval_report(ctx, "skewness_bounds", pair_labels(arms), std::nullopt,
                                   [&](const cm::ObservationTable& t,
                                       const cm::IntegrationConfig& config) {
                                       return cm::skewness_bounds(t, arms, config);
                                   });
        });
    }
    if (args.want_kurtosis) {
        ctx.run("kurtosis_bounds", [&] {
            return interval_report(ctx, "kurtosis_bounds", pair_labels(arms), std::nullopt,
                                   [&](const cm::ObservationTable& t,
                                       const cm::IntegrationConfig& config) {
                                       return cm::kurtosis_bounds(t, arms, config);
                                   });
        });
    }
    if (args.want_correlation) {
        ctx.run("correlation_bounds", [&] {
            return interval_report(ctx, "correlation_bounds", pair_labels(left, right),
                                   std::nullopt,
                                   [&](const cm::ObservationTable& t,
                                       const cm::IntegrationConfig& config) {
                                       return cm::correlation_bounds(t, left, right,
                                                                     config.with_dimension(2));
                                   });
        });
    }
    if (ctx.reports.empty() && ctx.errors.empty()) {
        throw cm::ConfigError("no quantity requested; pass --moment, --product, --skewness, ...");
    }
    return ctx.emit();
}

int run_simulate(const SharedOptions& opt, const std::string& preset_name, std::int64_t n) {
    const auto spec = cm::preset(preset_name);
    const auto table = cm::simulate(spec, n, opt.seed);
    const auto csv = cm::to_csv(table);
    write_output(opt, csv);
    if (!opt.output.empty()) {
        const nlohmann::json manifest = {
            {"subcommand", "simulate"}, {"preset", preset_name}, {"n", n}, {"seed", opt.seed},
            {"output", opt.output}};
        std::ofstream sidecar(opt.output + ".manifest.json", std::ios::binary);
        sidecar << manifest.dump(2) << "\n";
    }
    return 0;
}

struct ReproduceArgs {
    int replications = 1000;
    std::vector<std::int64_t> sizes = {20, 100, 1000};
    std::string scm = "both";
    std::int64_t mc_points_high = 0;
    std::string table_output;
};

int run_reproduce(const SharedOptions& opt, const ReproduceArgs& args) {
    cm::ReproduceOptions options;
    options.replications = args.replications;
    options.sample_sizes = args.sizes;
    options.seed = opt.seed;
    options.mc_points_low = opt.mc_points;
    options.mc_points_high = args.mc_points_high;
    options.include_scm_a = args.scm != "b";
    options.include_scm_b = args.scm != "a";

    const auto result = cm::run_reproduction(options);
    const auto table_text = cm::reproduce_to_table(result);
    write_output(opt, cm::reproduce_to_json(result).dump(2) + "\n");
    if (!args.table_output.empty()) {
        std::ofstream file(args.table_output, std::ios::binary);
        file << table_text;
    } else if (!opt.output.empty()) {
        std::cout << table_text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment, covariance and correlation estimation for causal effects, "
                 "with identification-free bounds"};
    app.require_subcommand(1);

    SharedOptions estimate_opt;
    EstimateArgs estimate_args;
    auto* estimate = app.add_subcommand(
        "estimate", "point estimates under exogeneity and response monotonicity");
    add_shared_flags(estimate, estimate_opt, true);
    estimate->add_flag("--ate", estimate_args.want_ate, "difference of arm means");
    estimate->add_option("--moment", estimate_args.moments, "moment order m (repeatable)");
    estimate->add_option("--central-moment", estimate_args.central_moments,
                         "central moment order m (repeatable)");
    estimate->add_flag("--product", estimate_args.want_product, "product moment of two effects");
    estimate->add_flag("--central-product", estimate_args.want_central_product,
                       "covariance of two effects");
    estimate->add_flag("--correlation", estimate_args.want_correlation,
                       "correlation of two effects");
    estimate->add_flag("--derived-stats", estimate_args.want_derived,
                       "variance, standard deviation, skewness, kurtosis");
    estimate->add_option("--arms", estimate_args.arms, "treated,control (default 1,0)");
    estimate->add_option("--arms-left", estimate_args.arms_left, "first effect as i,j");
    estimate->add_option("--arms-right", estimate_args.arms_right, "second effect as k,h");

    SharedOptions bounds_opt;
    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand(
        "bounds", "assumption-light bounds requiring exogeneity only");
    add_shared_flags(bounds, bounds_opt, true);
    bounds->add_option("--moment", bounds_args.moments, "moment order m (repeatable)");
    bounds->add_option("--central-moment", bounds_args.central_moments,
                       "central moment order m (repeatable)");
    bounds->add_flag("--product", bounds_args.want_product, "product-moment bounds");
    bounds->add_flag("--central-product", bounds_args.want_central_product,
                     "covariance bounds");
    bounds->add_flag("--skewness", bounds_args.want_skewness, "skewness bounds");
    bounds->add_flag("--kurtosis", bounds_args.want_kurtosis, "kurtosis bounds");
    bounds->add_flag("--correlation", bounds_args.want_correlation, "correlation bounds");
    bounds->add_option("--arms", bounds_args.arms, "treated,control (default 1,0)");
    bounds->add_option("--arms-left", bounds_args.arms_left, "first effect as i,j");
    bounds->add_option("--arms-right", bounds_args.arms_right, "second effect as k,h");

    SharedOptions simulate_opt;
    std::string preset_name;
    std::int64_t simulate_n = 1000;
    auto* simulate = app.add_subcommand("simulate", "draw a synthetic sample from a preset");
    add_shared_flags(simulate, simulate_opt, false);
    simulate->add_option("--preset", preset_name, "scm-a | scm-b | example-1 | example-2 | example-3")
        ->required();
    simulate->add_option("--n", simulate_n, "sample size")->check(CLI::PositiveNumber);

    SharedOptions reproduce_opt;
    ReproduceArgs reproduce_args;
    auto* reproduce = app.add_subcommand(
        "reproduce", "replicated benchmark protocol over the two synthetic models");
    add_shared_flags(reproduce, reproduce_opt, false);
    reproduce->add_option("--replications", reproduce_args.replications, "replications per size")
        ->check(CLI::PositiveNumber);
    reproduce->add_option("--sizes", reproduce_args.sizes, "sample sizes")->delimiter(',');
    reproduce->add_option("--scm", reproduce_args.scm, "which model to run")
        ->check(CLI::IsMember({"a", "b", "both"}));
    reproduce->add_option("--mc-points-high", reproduce_args.mc_points_high,
                          "integration points for 3- and 4-dimensional integrals");
    reproduce->add_option("--table-output", reproduce_args.table_output,
                          "write the text table to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (estimate->parsed()) return run_estimate(estimate_opt, estimate_args);
        if (bounds->parsed()) return run_bounds(bounds_opt, bounds_args);
        if (simulate->parsed()) return run_simulate(simulate_opt, preset_name, simulate_n);
        if (reproduce->parsed()) return run_reproduce(reproduce_opt, reproduce_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
