#include <doctest.h>

#include <cmath>
#include <vector>

#include "causalmoments/errors.hpp"
#include "causalmoments/quadrature.hpp"

using namespace causalmoments;

namespace {

IntegrationConfig joint_config(int dimension, std::int64_t points, std::uint64_t seed,
                               DomainBounds bounds) {
    IntegrationConfig config;
    config.dimension = dimension;
    config.mode = McMode::Joint;
    config.joint_points = points;
    config.seed = seed;
    config.bounds = bounds;
    return config;
}

} // namespace

TEST_CASE("axis draws are reproducible and land inside the bounds") {
    const DomainBounds bounds{0.0, 1.0};
    const auto first = draw_axis_points(bounds, 3, 42, 0);
    const auto second = draw_axis_points(bounds, 3, 42, 0);
    CHECK(first == second);
    for (double p : first) {
        CHECK(p >= 0.0);
        CHECK(p < 1.0);
    }
    const auto other_axis = draw_axis_points(bounds, 3, 42, 1);
    CHECK(first != other_axis);
}

TEST_CASE("degenerate bounds collapse every draw to the same point") {
    const auto points = draw_axis_points(DomainBounds{2.5, 2.5}, 10, 1, 0);
    for (double p : points) CHECK(p == 2.5);
}

TEST_CASE("law of large numbers: draw mean near the interval midpoint") {
    const auto points = draw_axis_points(DomainBounds{0.0, 1.0}, 100000, 2024, 0);
    double sum = 0.0;
    for (double p : points) sum += p;
    CHECK(std::abs(sum / static_cast<double>(points.size()) - 0.5) < 0.01);
}

TEST_CASE("constant integrand integrates to the cube volume exactly") {
    const auto estimate = integrate([](std::span<const double>) { return 1.0; },
                                    joint_config(2, 1000, 9, DomainBounds{0.0, 2.0}));
    CHECK(estimate.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(estimate.std_error == doctest::Approx(0.0));
}

TEST_CASE("indicator of y1 < y2 on the unit square is close to one half") {
    const auto estimate = integrate(
        [](std::span<const double> y) { return y[0] < y[1] ? 1.0 : 0.0; },
        joint_config(2, 100000, 11, DomainBounds{0.0, 1.0}));
    CHECK(std::abs(estimate.value - 0.5) < 0.01);
    CHECK(estimate.std_error > 0.0);
    CHECK(estimate.std_error < 0.01);
}

TEST_CASE("same configuration and integrand give bit-identical results") {
    const auto config = joint_config(3, 20000, 77, DomainBounds{-1.0, 2.0});
    const Integrand f = [](std::span<const double> y) { return y[0] * y[1] + y[2]; };
    const auto a = integrate(f, config);
    const auto b = integrate(f, config);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("integration is linear in the integrand to near machine precision") {
    const auto config = joint_config(2, 50000, 5, DomainBounds{0.0, 3.0});
    const Integrand f = [](std::span<const double> y) { return std::sin(y[0]) + y[1]; };
    const Integrand g = [](std::span<const double> y) { return y[0] * y[1]; };
    const double alpha = 2.25, beta = -0.75;
    const Integrand combined = [&](std::span<const double> y) {
        return alpha * f(y) + beta * g(y);
    };
    const double direct = integrate(combined, config).value;
    const double split = alpha * integrate(f, config).value + beta * integrate(g, config).value;
    CHECK(direct == doctest::Approx(split).epsilon(1e-12));
}

TEST_CASE("tensor mode enumerates the full grid") {
    IntegrationConfig config;
    config.dimension = 2;
    config.mode = McMode::Tensor;
    config.points_per_axis = {40, 60};
    config.seed = 13;
    config.bounds = DomainBounds{0.0, 1.0};

    // Mean of y1 over the grid equals the mean of the first axis draws.
    const auto axis = draw_axis_points(*config.bounds, 40, 13, 0);
    double axis_mean = 0.0;
    for (double p : axis) axis_mean += p;
    axis_mean /= 40.0;

    const auto estimate = integrate([](std::span<const double> y) { return y[0]; }, config);
    CHECK(estimate.points == 40 * 60);
    CHECK(estimate.value == doctest::Approx(axis_mean).epsilon(1e-12));
}

TEST_CASE("tensor mode beyond two dimensions needs an explicit opt-in") {
    IntegrationConfig config;
    config.dimension = 3;
    config.mode = McMode::Tensor;
    config.points_per_axis = {4, 4, 4};
    config.bounds = DomainBounds{0.0, 1.0};
    CHECK_THROWS_WITH_AS(integrate([](std::span<const double>) { return 1.0; }, config),
                         doctest::Contains("joint"), ConfigError);

    config.allow_high_dim_tensor = true;
    const auto estimate = integrate([](std::span<const double>) { return 1.0; }, config);
    CHECK(estimate.points == 64);
    CHECK(estimate.value == doctest::Approx(1.0));
}

TEST_CASE("configuration validation rejects bad settings") {
    IntegrationConfig config;
    config.dimension = 0;
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = IntegrationConfig{};
    config.joint_points = -5;
    config.bounds = DomainBounds{0.0, 1.0};
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = IntegrationConfig{};
    CHECK_THROWS_AS(integrate([](std::span<const double>) { return 1.0; }, config),
                    ConfigError); // unresolved bounds
}

TEST_CASE("zero-volume cube integrates to zero for any dimension") {
    for (int dim : {1, 2, 4}) {
        const auto estimate = integrate([](std::span<const double>) { return 123.0; },
                                        joint_config(dim, 100, 3, DomainBounds{1.5, 1.5}));
        CHECK(estimate.value == 0.0);
    }
}

TEST_CASE("joint-mode standard error shrinks like the square root of the points") {
    // Empirical std over repeated estimates at n and 16n should contract ~4x.
    const Integrand f = [](std::span<const double> y) { return y[0] < y[1] ? 1.0 : 0.0; };
    auto spread = [&](std::int64_t n) {
        std::vector<double> values;
        for (std::uint64_t seed = 0; seed < 48; ++seed) {
            values.push_back(
                integrate(f, joint_config(2, n, 1000 + seed, DomainBounds{0.0, 1.0})).value);
        }
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        return std::sqrt(var / static_cast<double>(values.size() - 1));
    };
    const double ratio = spread(500) / spread(8000);
    CHECK(ratio > 4.0 * 0.7);
    CHECK(ratio < 4.0 * 1.3);
}

TEST_CASE("multi-output integration matches separate passes") {
    const auto config = joint_config(2, 10000, 21, DomainBounds{0.0, 1.0});
    const auto both = integrate_multi(
        [](std::span<const double> y, std::span<double> out) {
            out[0] = y[0];
            out[1] = y[0] * y[1];
        },
        2, config);
    const auto first = integrate([](std::span<const double> y) { return y[0]; }, config);
    const auto second = integrate([](std::span<const double> y) { return y[0] * y[1]; }, config);
    CHECK(both[0].value == first.value);
    CHECK(both[1].value == second.value);
}
