#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "causalmoments/errors.hpp"
#include "causalmoments/identify.hpp"
#include "causalmoments/oracle.hpp"
#include "causalmoments/scm.hpp"
#include "test_util.hpp"

using namespace causalmoments;

namespace {

IntegrationConfig joint(int dimension, std::int64_t points, std::uint64_t seed) {
    IntegrationConfig config;
    config.dimension = dimension;
    config.joint_points = points;
    config.seed = seed;
    return config;
}

} // namespace

TEST_CASE("ate is the difference of arm means") {
    const auto table = cmtest::make_table({{0, 1.0}, {1, 3.0}});
    CHECK(ate(table, ArmPair{1, 0}) == 2.0);
    CHECK(ate(table, ArmPair{0, 1}) == -2.0);
}

TEST_CASE("ate on a large model-A sample approaches minus one half") {
    // The effect is minus the absolute noise; its mean is -1/2.
    const auto table = simulate(preset("scm-a"), 100000, 8);
    CHECK(std::abs(ate(table, ArmPair{1, 0}) + 0.5) < 0.01);
}

TEST_CASE("order-one moment estimate matches the ate up to integration noise") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto table = simulate(random_scm(200 + seed), 400, seed);
        const auto estimate = moment_identified(table, {1, ArmPair{1, 0}, false,
                                                        joint(1, 20000, 77 + seed)});
        const double difference = std::abs(estimate.value - ate(table, ArmPair{1, 0}));
        CHECK(difference <= 3.0 * estimate.mc_std_error);
    }
}

TEST_CASE("second moment on model A lands near one third") {
    const auto table = simulate(preset("scm-a"), 20000, 5);
    const auto estimate = moment_identified(table, {2, ArmPair{1, 0}, false, joint(2, 100000, 3)});
    CHECK(std::abs(estimate.value - 1.0 / 3.0) < 0.04);
}

TEST_CASE("homogeneous shift model: every identified moment near one") {
    const auto table = simulate(preset("example-1"), 20000, 21);
    for (int m : {1, 2, 3, 4}) {
        const auto estimate = moment_identified(
            table, {m, ArmPair{1, 0}, false, joint(m, m <= 2 ? 50000 : 200000, 4)});
        CHECK(std::abs(estimate.value - 1.0) < 0.05);
        const auto central = central_moment_identified(
            table, {m, ArmPair{1, 0}, false, joint(m, m <= 2 ? 50000 : 200000, 4)});
        CHECK(std::abs(central.value) < 0.02);
    }
}

TEST_CASE("first central moment vanishes up to noise on any sample") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto table = simulate(random_monotone_scm(40 + seed), 300, seed);
        const auto estimate =
            central_moment_identified(table, {1, ArmPair{1, 0}, false, joint(1, 20000, seed)});
        CHECK(std::abs(estimate.value) <= 3.0 * std::max(estimate.mc_std_error, 1e-6));
    }
}

TEST_CASE("interaction model: second central moment is the noise variance") {
    // Response x*(u+1)+1 over the pair (1,0): the effect is u+1 with variance 1/3.
    const auto table = simulate(preset("example-2"), 20000, 33);
    const auto estimate =
        central_moment_identified(table, {2, ArmPair{1, 0}, false, joint(2, 100000, 9)});
    CHECK(std::abs(estimate.value - 1.0 / 3.0) < 0.04);
}

TEST_CASE("even-order moment estimates are nonnegative by construction") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto table = simulate(random_scm(300 + seed), 200, seed);
        for (int m : {2, 4}) {
            const auto estimate = moment_identified(
                table, {m, ArmPair{1, 0}, false, joint(m, 5000, seed)});
            CHECK(estimate.value >= 0.0);
        }
    }
}

TEST_CASE("raw moment estimates are invariant under row permutation") {
    const auto table = simulate(preset("scm-b"), 200, 3);
    std::vector<Observation> shuffled(table.rows());
    std::mt19937 rng(15);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const ObservationTable permuted{shuffled};

    const auto config = joint(2, 5000, 8);
    const auto a = moment_identified(table, {2, ArmPair{1, 0}, false, config});
    const auto b = moment_identified(permuted, {2, ArmPair{1, 0}, false, config});
    CHECK(a.value == b.value);
}

TEST_CASE("squared-interaction model: product moment of adjacent effects") {
    // Effects are (u+1) and -(u+1); expectation of the product is -4/3.
    const auto table = simulate(preset("example-3"), 20000, 44);
    const auto estimate = product_moment_identified(table, ArmPair{1, 0}, ArmPair{0, -1},
                                                    joint(2, 100000, 13), false);
    CHECK(std::abs(estimate.value + 4.0 / 3.0) < 0.05);
}

TEST_CASE("shift model: product moment of adjacent effects is one, covariance zero") {
    const auto table = simulate(preset("example-1"), 20000, 55);
    const auto product = product_moment_identified(table, ArmPair{1, 0}, ArmPair{0, -1},
                                                   joint(2, 100000, 17), false);
    CHECK(std::abs(product.value - 1.0) < 0.05);
    const auto covariance = central_product_moment_identified(table, ArmPair{1, 0},
                                                              ArmPair{0, -1},
                                                              joint(2, 100000, 17));
    CHECK(std::abs(covariance.value) < 0.03);
}

TEST_CASE("squared-interaction model: covariance -1/3 and correlation clipped at -1") {
    const auto table = simulate(preset("example-3"), 20000, 66);
    const auto covariance = central_product_moment_identified(table, ArmPair{1, 0},
                                                              ArmPair{0, -1},
                                                              joint(2, 100000, 19));
    CHECK(std::abs(covariance.value + 1.0 / 3.0) < 0.04);
    const auto correlation =
        correlation_identified(table, ArmPair{1, 0}, ArmPair{0, -1}, joint(2, 100000, 19));
    CHECK(correlation.value >= -1.0);
    CHECK(correlation.value < -0.97);
}

TEST_CASE("plug-in covariance resolves mixed-direction responses to the monotone model") {
    // x*(u+1)+1 and x^2*(u+1)+1 induce identical centered arm distributions,
    // but only the latter is monotone in the noise across all three arms. The
    // plug-in therefore reports the monotone-compatible covariance for both;
    // enumeration distinguishes them.
    const auto mixed = discretize(preset("example-2"), 64);
    const auto monotone = discretize(preset("example-3"), 64);
    const ArmPair left{1, 0};
    const ArmPair right{0, -1};

    const double truth_mixed = exact_product_moment(mixed, left, right, true);
    const double truth_monotone = exact_product_moment(monotone, left, right, true);
    CHECK(truth_mixed == doctest::Approx(-truth_monotone));
    CHECK(truth_monotone < 0.0);

    const double plugin_mixed = exact_plugin_product(mixed, left, right, true);
    const double plugin_monotone = exact_plugin_product(monotone, left, right, true);
    CHECK(plugin_mixed == doctest::Approx(plugin_monotone).epsilon(1e-9));
    CHECK(plugin_monotone == doctest::Approx(truth_monotone).epsilon(1e-9));

    // On samples the same resolution appears: the interaction model's
    // estimated correlation comes out at -1, not +1.
    const auto table = simulate(preset("example-2"), 20000, 77);
    const auto correlation =
        correlation_identified(table, left, right, joint(2, 100000, 23));
    CHECK(correlation.value < -0.97);
}

TEST_CASE("derived stats on model A: variance near 1/12, kurtosis denominator guarded") {
    // Exact reference first: the population plug-in of the discretized model.
    const auto scm = discretize(preset("scm-a"), 500);
    CHECK(std::abs(exact_plugin_moment(scm, ArmPair{1, 0}, 2, true) - 1.0 / 12.0) < 1e-3);

    const auto table = simulate(preset("scm-a"), 100000, 10);
    const auto stats = derived_stats(table, ArmPair{1, 0}, joint(2, 100000, 29));
    CHECK(std::abs(stats.variance - 1.0 / 12.0) < 0.01);
    CHECK(stats.std_dev == doctest::Approx(std::sqrt(stats.variance)));
    // variance^2 < 0.01 forces the kurtosis denominator guard
    const bool guarded =
        std::find(stats.flags.begin(), stats.flags.end(), "denominator_guarded") !=
        stats.flags.end();
    CHECK(guarded);
}

TEST_CASE("degenerate homogeneous effect: derived stats collapse to zero") {
    const auto table = simulate(preset("example-1"), 5000, 12);
    const auto stats = derived_stats(table, ArmPair{1, 0}, joint(2, 20000, 31));
    CHECK(stats.variance < 0.01);
    CHECK(stats.std_dev < 0.1);
}

TEST_CASE("request validation: order, arms, dimension") {
    const auto table = cmtest::make_table({{0, 1.0}, {1, 2.0}});
    CHECK_THROWS_AS(moment_identified(table, {0, ArmPair{1, 0}, false, joint(1, 100, 0)}),
                    ConfigError);
    CHECK_THROWS_AS(moment_identified(table, {1, ArmPair{2, 0}, false, joint(1, 100, 0)}),
                    NoDataError);
    CHECK_THROWS_AS(moment_identified(table, {1, ArmPair{1, 1}, false, joint(1, 100, 0)}),
                    ValidationError);
    CHECK_THROWS_AS(product_moment_identified(table, ArmPair{1, 0}, ArmPair{1, 0},
                                              joint(3, 100, 0), false),
                    ConfigError);
}

TEST_CASE("degenerate effects trip the correlation denominator guard") {
    // Point-mass arms: both effect variances are zero.
    const auto table = cmtest::make_table(
        {{-1, 1.0}, {-1, 1.0}, {0, 2.0}, {0, 2.0}, {1, 3.0}, {1, 3.0}});
    const auto correlation =
        correlation_identified(table, ArmPair{1, 0}, ArmPair{0, -1}, joint(2, 2000, 1));
    const bool guarded =
        std::find(correlation.flags.begin(), correlation.flags.end(), "denominator_guarded") !=
        correlation.flags.end();
    CHECK(guarded);
    CHECK(correlation.value >= -1.0);
    CHECK(correlation.value <= 1.0);
}
