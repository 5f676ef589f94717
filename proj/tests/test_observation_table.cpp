#include <doctest.h>

#include <cmath>
#include <limits>

#include "causalmoments/errors.hpp"
#include "causalmoments/observation_table.hpp"
#include "causalmoments/scm.hpp"
#include "test_util.hpp"

using namespace causalmoments;

TEST_CASE("csv ingestion parses arms and outcomes") {
    const auto table = parse_csv("x,y\n0,1.5\n1,2.0\n");
    CHECK(table.size() == 2);
    CHECK(table.arms() == std::vector<int>{0, 1});
    CHECK(table.rows()[0].outcome == 1.5);
    CHECK(!table.has_covariates());
}

TEST_CASE("csv ingestion picks up the covariate column") {
    const auto table = parse_csv("x,y,w\n1,5.0,0\n");
    CHECK(table.has_covariates());
    CHECK(table.covariates() == std::vector<int>{0});
}

TEST_CASE("csv columns are located by header name, extras ignored") {
    const auto table = parse_csv("id,y,x\n9,2.5,1\n");
    CHECK(table.size() == 1);
    CHECK(table.rows()[0].arm == 1);
    CHECK(table.rows()[0].outcome == 2.5);
}

TEST_CASE("malformed numeric cell reports the data row number") {
    CHECK_THROWS_WITH_AS(parse_csv("x,y\n0,abc\n"),
                         doctest::Contains("row 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_csv("x,y\n0,1.0\n0,oops\n"),
                         doctest::Contains("row 2"), ParseError);
}

TEST_CASE("missing required column is a schema error") {
    CHECK_THROWS_AS(parse_csv("x,z\n0,1.0\n"), SchemaError);
    CHECK_THROWS_AS(parse_csv("", {}), SchemaError);
}

TEST_CASE("non-finite outcomes are rejected at ingestion") {
    CHECK_THROWS_AS(parse_csv("x,y\n0,nan\n"), ValidationError);
    CHECK_THROWS_AS(parse_csv("x,y\n0,inf\n"), ValidationError);
    std::vector<Observation> rows{{0, std::numeric_limits<double>::quiet_NaN()}};
    CHECK_THROWS_AS(ObservationTable{rows}, ValidationError);
}

TEST_CASE("all-whitespace rows are skipped") {
    const auto table = parse_csv("x,y\n0,1.0\n   \n\t\n1,2.0\n");
    CHECK(table.size() == 2);
}

TEST_CASE("csv round-trips through to_csv") {
    const auto table = parse_csv("x,y,w\n0,1.25,0\n1,-3.5,1\n");
    const auto again = parse_csv(to_csv(table));
    REQUIRE(again.size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(again.rows()[i].arm == table.rows()[i].arm);
        CHECK(again.rows()[i].outcome == table.rows()[i].outcome);
        CHECK(again.covariates()[i] == table.covariates()[i]);
    }
}

TEST_CASE("conditional mean is the sequential per-arm average") {
    const auto table = cmtest::make_table({{0, 1.0}, {0, 3.0}, {1, 5.0}});
    CHECK(conditional_mean(table, 0) == (1.0 + 3.0) / 2.0);
    CHECK(conditional_mean(table, 1) == 5.0);
    CHECK_THROWS_AS(conditional_mean(table, 2), NoDataError);
}

TEST_CASE("large-sample control-arm mean of model A sits near zero") {
    // Under the zero arm the outcome is minus the noise, which has mean zero.
    const auto table = simulate(preset("scm-a"), 100000, 424242);
    CHECK(std::abs(conditional_mean(table, 0)) < 0.01);
}

TEST_CASE("domain bounds pool all arms") {
    const auto table = cmtest::make_table({{0, 1.0}, {1, 5.0}});
    const auto bounds = domain_bounds(table, false);
    CHECK(bounds.lower == 1.0);
    CHECK(bounds.upper == 5.0);
}

TEST_CASE("centered domain bounds pool per-arm centered outcomes") {
    const auto table = cmtest::make_table({{0, 1.0}, {0, 3.0}});
    const auto bounds = domain_bounds(table, true);
    CHECK(bounds.lower == -1.0);
    CHECK(bounds.upper == 1.0);
}

TEST_CASE("empty table cannot produce bounds") {
    CHECK_THROWS_AS(domain_bounds(ObservationTable{}, false), NoDataError);
}

TEST_CASE("covariate column must cover every row") {
    std::vector<Observation> rows{{0, 1.0}, {1, 2.0}};
    std::vector<int> covariates{0};
    CHECK_THROWS_AS(ObservationTable(rows, covariates), ValidationError);
}

TEST_CASE("invalid bounds are rejected") {
    CHECK_THROWS_AS((DomainBounds{2.0, 1.0}).validate(), ConfigError);
    CHECK_THROWS_AS(
        (DomainBounds{0.0, std::numeric_limits<double>::infinity()}).validate(), ConfigError);
    CHECK_NOTHROW((DomainBounds{1.0, 1.0}).validate());
}
