// Acceptance suite: every release criterion computed at its pinned tolerance,
// one PASS/FAIL line per criterion. Run with criterion numbers as arguments
// (default: all). Exits nonzero if any requested criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "causalmoments/bootstrap.hpp"
#include "causalmoments/bounds.hpp"
#include "causalmoments/identify.hpp"
#include "causalmoments/oracle.hpp"
#include "causalmoments/parallel.hpp"
#include "causalmoments/reproduce.hpp"
#include "causalmoments/rng.hpp"
#include "causalmoments/scm.hpp"

using namespace causalmoments;

namespace {

struct CriterionReport {
    bool passed = true;
    std::vector<std::string> details;

    void check(const std::string& label, bool ok, const std::string& values) {
        passed = passed && ok;
        details.push_back(std::string(ok ? "    ok   " : "    FAIL ") + label +
                          (values.empty() ? "" : "  [" + values + "]"));
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(4);
    out << std::fixed << v;
    return out.str();
}

IntegrationConfig joint(int dimension, std::int64_t points, std::uint64_t seed) {
    IntegrationConfig config;
    config.dimension = dimension;
    config.joint_points = points;
    config.seed = seed;
    return config;
}

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

// ---- shared desk-scale reproduction of the benchmark tables ----

struct TableRuns {
    std::map<std::string, ReproduceCell> scm_a; // estimator -> N=1000 cell
    std::map<std::string, ReproduceCell> scm_b;
    double seconds = 0.0;
};

const TableRuns& table_runs() {
    static const TableRuns runs = [] {
        const auto start = std::chrono::steady_clock::now();
        ReproduceOptions options;
        options.replications = 200;
        options.sample_sizes = {1000};
        options.seed = 20240817;
        const auto result = run_reproduction(options);
        TableRuns out;
        for (const auto& row : result.scm_a_rows) out.scm_a[row.estimator] = row.by_size.at(1000);
        for (const auto& row : result.scm_b_rows) out.scm_b[row.estimator] = row.by_size.at(1000);
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }();
    return runs;
}

// ---- criteria ----

CriterionReport criterion1() {
    CriterionReport report;
    const auto& runs = table_runs();
    const double m2 = runs.scm_a.at("moment_m2").mean;
    const double m3 = runs.scm_a.at("moment_m3").mean;
    const double m4 = runs.scm_a.at("moment_m4").mean;
    report.check("replicate-mean of 2nd moment in [0.30, 0.37] (truth 1/3)",
                 m2 >= 0.30 && m2 <= 0.37, fmt(m2));
    report.check("replicate-mean of 3rd moment in [-0.31, -0.19] (truth -1/4)",
                 m3 >= -0.31 && m3 <= -0.19, fmt(m3));
    report.check("replicate-mean of 4th moment in [0.11, 0.29] (truth 1/5)",
                 m4 >= 0.11 && m4 <= 0.29, fmt(m4));
    report.check("desk-scale run under 10 minutes", runs.seconds < 600.0,
                 fmt(runs.seconds) + "s");
    return report;
}

CriterionReport criterion2() {
    CriterionReport report;
    const auto& runs = table_runs();
    const double u2 = runs.scm_a.at("moment_m2_upper").mean;
    const double l2 = runs.scm_a.at("moment_m2_lower").mean;
    const double l3 = runs.scm_a.at("moment_m3_lower").mean;
    const double u3 = runs.scm_a.at("moment_m3_upper").mean;
    const double u4 = runs.scm_a.at("moment_m4_upper").mean;
    report.check("upper 2nd-moment bound in [1.48, 1.78]", u2 >= 1.48 && u2 <= 1.78, fmt(u2));
    report.check("lower 2nd-moment bound <= 0.01", l2 <= 0.01, fmt(l2));
    report.check("lower 3rd-moment bound in [-3.9, -3.0]", l3 >= -3.9 && l3 <= -3.0, fmt(l3));
    report.check("upper 3rd-moment bound in [0.07, 0.18]", u3 >= 0.07 && u3 <= 0.18, fmt(u3));
    report.check("upper 4th-moment bound in [7.0, 9.0]", u4 >= 7.0 && u4 <= 9.0, fmt(u4));
    return report;
}

CriterionReport criterion3() {
    CriterionReport report;
    const auto& runs = table_runs();
    const double product = runs.scm_b.at("product").mean;
    const double lower = runs.scm_b.at("product_lower").mean;
    const double upper = runs.scm_b.at("product_upper").mean;
    report.check("replicate-mean product moment in [-0.42, -0.26] (truth -1/3)",
                 product >= -0.42 && product <= -0.26, fmt(product));
    report.check("lower-bound mean within 0.08 of -0.338", std::abs(lower + 0.338) <= 0.08,
                 fmt(lower));
    report.check("upper-bound mean within 0.08 of -0.168", std::abs(upper + 0.168) <= 0.08,
                 fmt(upper));
    return report;
}

CriterionReport criterion4() {
    CriterionReport report;
    const double tolerance = 1e-4;
    double worst_gap = 0.0;
    bool plugin_ok = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto scm = random_monotone_scm(seed);
        const ArmPair pair{1, 0};
        const ArmPair right = scm.arms.size() >= 3 ? ArmPair{2, 1} : ArmPair{1, 0};
        for (bool centered : {false, true}) {
            for (int m : {1, 2, 3, 4}) {
                const double gap = std::abs(exact_plugin_moment(scm, pair, m, centered) -
                                            exact_moment(scm, pair, m, centered));
                worst_gap = std::max(worst_gap, gap);
                plugin_ok = plugin_ok && gap <= tolerance;
            }
            const double gap = std::abs(exact_plugin_product(scm, pair, right, centered) -
                                        exact_product_moment(scm, pair, right, centered));
            worst_gap = std::max(worst_gap, gap);
            plugin_ok = plugin_ok && gap <= tolerance;
        }
    }
    report.check("plug-in formulas match enumeration on 20 monotone models (<= 1e-4)",
                 plugin_ok, "worst gap " + fmt(worst_gap));

    int containment_failures = 0;
    int containment_checks = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (const auto& scm : {random_monotone_scm(seed), random_scm(seed)}) {
            const ArmPair pair{1, 0};
            const ArmPair right = scm.arms.size() >= 3 ? ArmPair{2, 0} : ArmPair{1, 0};
            for (bool centered : {false, true}) {
                for (int m : {1, 2, 3, 4}) {
                    const auto interval = exact_moment_bound_interval(scm, pair, m, centered);
                    const double target = exact_moment(scm, pair, m, centered);
                    ++containment_checks;
                    if (!(interval.lower <= target + 1e-9 && target <= interval.upper + 1e-9)) {
                        ++containment_failures;
                    }
                }
                const auto interval = exact_product_bound_interval(scm, pair, right, centered);
                const double target = exact_product_moment(scm, pair, right, centered);
                ++containment_checks;
                if (!(interval.lower <= target + 1e-9 && target <= interval.upper + 1e-9)) {
                    ++containment_failures;
                }
            }
        }
    }
    report.check("bound intervals contain the enumerated target (zero failures allowed)",
                 containment_failures == 0,
                 std::to_string(containment_failures) + "/" +
                     std::to_string(containment_checks) + " failures");
    return report;
}

CriterionReport criterion5() {
    CriterionReport report;
    int passed = 0;
    const int draws = 50;
    std::vector<int> results(draws, 0);
    parallel_for(draws, [&](std::size_t d) {
        const auto scm = d % 2 == 0 ? random_monotone_scm(5000 + d) : random_scm(5000 + d);
        const auto table = simulate(scm, 500, 111 + d);
        const ArmPair pair{1, 0};
        const ArmPair right = scm.arms.size() >= 3 ? ArmPair{2, 1} : ArmPair{1, 0};
        bool all_inside = true;
        for (int m : {1, 2, 3, 4}) {
            const auto config = joint(m, m <= 2 ? 3000 : 8000, 777 + d);
            const auto value = moment_identified(table, {m, pair, false, config});
            const auto interval = moment_bounds(table, m, pair, false, config);
            const double slack =
                3.0 * (value.mc_std_error + interval.lower_std_error + interval.upper_std_error);
            all_inside = all_inside && value.value >= interval.interval.lower - slack &&
                         value.value <= interval.interval.upper + slack;
        }
        const auto config = joint(2, 3000, 778 + d);
        const auto value = product_moment_identified(table, pair, right, config, false);
        const auto interval = product_bounds(table, pair, right, false, config);
        const double slack =
            3.0 * (value.mc_std_error + interval.lower_std_error + interval.upper_std_error);
        all_inside = all_inside && value.value >= interval.interval.lower - slack &&
                     value.value <= interval.interval.upper + slack;
        results[d] = all_inside ? 1 : 0;
    });
    for (int r : results) passed += r;
    report.check("same-seed sandwich holds on >= 49 of 50 random model draws", passed >= 49,
                 std::to_string(passed) + "/50");
    return report;
}

CriterionReport criterion6() {
    CriterionReport report;

    // Homogeneous shift model, replicate means over 200 datasets of N=2000.
    const int replications = 200;
    std::vector<std::vector<double>> raw(4, std::vector<double>(replications));
    std::vector<std::vector<double>> central(4, std::vector<double>(replications));
    const auto spec = preset("example-1");
    parallel_for(replications, [&](std::size_t r) {
        const auto table = simulate(spec, 2000, derive_seed(61, r));
        for (int m : {1, 2, 3, 4}) {
            const auto config = joint(m, m <= 2 ? 30000 : 200000, derive_seed(62, r));
            raw[m - 1][r] = moment_identified(table, {m, ArmPair{1, 0}, false, config}).value;
            central[m - 1][r] =
                moment_identified(table, {m, ArmPair{1, 0}, true, config}).value;
        }
    });
    for (int m : {1, 2, 3, 4}) {
        const double raw_mean = mean_of(raw[m - 1]);
        const double central_mean = mean_of(central[m - 1]);
        report.check("homogeneous-shift moment m=" + std::to_string(m) + " equals 1 +/- 0.03",
                     std::abs(raw_mean - 1.0) <= 0.03, fmt(raw_mean));
        report.check("homogeneous-shift central moment m=" + std::to_string(m) +
                         " equals 0 +/- 0.03",
                     std::abs(central_mean) <= 0.03, fmt(central_mean));
    }

    // Correlation sign cases on the two interaction presets.
    auto mean_correlation = [&](const std::string& preset_name, std::uint64_t tag) {
        std::vector<double> values(20);
        const auto model = preset(preset_name);
        parallel_for(values.size(), [&](std::size_t r) {
            const auto table = simulate(model, 2000, derive_seed(tag, r));
            values[r] = correlation_identified(table, ArmPair{1, 0}, ArmPair{0, -1},
                                               joint(2, 30000, derive_seed(tag + 1, r)))
                            .value;
        });
        return mean_of(values);
    };
    const double corr2 = mean_correlation("example-2", 63);
    const double corr3 = mean_correlation("example-3", 65);
    report.check("interaction-model correlation clips to +1 (+/- 0.03)",
                 std::abs(corr2 - 1.0) <= 0.03, fmt(corr2));
    report.check("squared-interaction correlation clips to -1 (+/- 0.03)",
                 std::abs(corr3 + 1.0) <= 0.03, fmt(corr3));
    return report;
}

CriterionReport criterion7() {
    CriterionReport report;
    int passed = 0;
    const int samples = 100;
    std::vector<int> results(samples, 0);
    parallel_for(samples, [&](std::size_t s) {
        const auto scm = s % 2 == 0 ? random_monotone_scm(9000 + s) : random_scm(9000 + s);
        const auto table = simulate(scm, 400, 321 + s);
        const auto estimate =
            moment_identified(table, {1, ArmPair{1, 0}, false, joint(1, 20000, 555 + s)});
        const double difference = std::abs(estimate.value - ate(table, ArmPair{1, 0}));
        results[s] = difference <= 3.0 * estimate.mc_std_error ? 1 : 0;
    });
    for (int r : results) passed += r;
    report.check("order-one estimate within 3 MC standard errors of the ate on 100 samples",
                 passed == samples, std::to_string(passed) + "/100");
    return report;
}

CriterionReport criterion8() {
    CriterionReport report;
    const int datasets = 200;
    const double truth = 1.0 / 3.0;
    std::vector<int> covered(datasets, 0);
    const auto spec = preset("scm-a");
    parallel_for(datasets, [&](std::size_t d) {
        const auto table = simulate(spec, 100, derive_seed(808, d));
        BootstrapConfig config;
        config.replicates = 300;
        config.level = 0.95;
        config.seed = derive_seed(809, d);
        const auto result = bootstrap_ci(
            [](const ObservationTable& t, std::uint64_t mc_seed) {
                return moment_identified(t, {2, ArmPair{1, 0}, false, joint(2, 20000, mc_seed)})
                    .value;
            },
            table, config);
        covered[d] = (result.lower <= truth && truth <= result.upper) ? 1 : 0;
    });
    int count = 0;
    for (int c : covered) count += c;
    const double rate = static_cast<double>(count) / datasets;
    report.check("95% bootstrap CI covers 1/3 at a rate in [0.85, 0.99]",
                 rate >= 0.85 && rate <= 0.99, fmt(rate));
    return report;
}

CriterionReport criterion9() {
    CriterionReport report;
    const char* cli = std::getenv("CAUSAL_MOMENTS_CLI");
    if (cli == nullptr) {
        report.check("CAUSAL_MOMENTS_CLI points at the command-line binary", false, "unset");
        return report;
    }
    auto run = [&](const std::string& out) {
        const std::string command = std::string(cli) +
                                    " reproduce --seed 5 --replications 4 --sizes 20,50"
                                    " --mc-points 2000 --mc-points-high 4000 --output " +
                                    out + " >/dev/null 2>&1";
        return std::system(command.c_str()) == 0;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream file(path, std::ios::binary);
        std::stringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    };
    const std::string first = "/tmp/cm_acceptance_rep1.json";
    const std::string second = "/tmp/cm_acceptance_rep2.json";
    const bool ran = run(first) && run(second);
    report.check("two reproduction runs completed", ran, "");
    const auto a = slurp(first);
    const auto b = slurp(second);
    report.check("same-seed reproduction artifacts are byte-identical",
                 ran && !a.empty() && a == b,
                 std::to_string(a.size()) + " bytes each");
    return report;
}

} // namespace

int main(int argc, char** argv) {
    const std::map<int, std::pair<std::string, std::function<CriterionReport()>>> criteria = {
        {1, {"benchmark model A: identified-moment replicate means", criterion1}},
        {2, {"benchmark model A: bound replicate means", criterion2}},
        {3, {"benchmark model B: product moment and bounds", criterion3}},
        {4, {"exact-oracle equivalence and bound containment", criterion4}},
        {5, {"same-seed sandwich on random models", criterion5}},
        {6, {"degenerate and homogeneous suite", criterion6}},
        {7, {"order-one consistency with the ate", criterion7}},
        {8, {"bootstrap coverage of the second moment", criterion8}},
        {9, {"byte-identical reproduction artifacts", criterion9}},
    };

    std::set<int> requested;
    for (int a = 1; a < argc; ++a) requested.insert(std::atoi(argv[a]));
    if (requested.empty()) {
        for (const auto& [id, entry] : criteria) requested.insert(id);
    }

    bool all_passed = true;
    for (int id : requested) {
        const auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::cerr << "unknown criterion " << id << "\n";
            return 2;
        }
        const auto start = std::chrono::steady_clock::now();
        const auto report = it->second.second();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (report.passed ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": "
                  << it->second.first << "  (" << fmt(seconds) << "s)\n";
        for (const auto& line : report.details) std::cout << line << "\n";
        all_passed = all_passed && report.passed;
    }
    return all_passed ? 0 : 1;
}
