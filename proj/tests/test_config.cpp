#include <catch2/catch_amalgamated.hpp>

#include <variant>

#include "motivic/io.hpp"

using motivic::assemble;
using motivic::config_error;
using motivic::polynomial;
using motivic::series;
using motivic::stratification;
using motivic::stratification_from_json;
using nlohmann::json;

TEST_CASE("loading a builtin-origin config", "[config]") {
    const auto j = json::parse(R"({
        "order": 6,
        "strata": [
            {"class": [3], "local": {"builtin": "origin", "M": 3, "N": -1, "variant": 2}},
            {"class": [-2, 1, 1], "local": {"builtin": "smooth-point-surface", "M": 3}, "scale": 1}
        ]
    })");
    const stratification spec = stratification_from_json(j);
    CHECK(spec.order == 6);
    REQUIRE(spec.strata.size() == 2);
    CHECK(spec.strata[0].cls == polynomial(3));
    CHECK(spec.strata[0].scale == 1);
    CHECK(spec.strata[1].cls ==
          polynomial::lefschetz(2) + polynomial::lefschetz(1) - polynomial(2));
    CHECK(std::holds_alternative<motivic::origin_series_ref>(spec.strata[0].local));
    CHECK(std::holds_alternative<motivic::smooth_point_ref>(spec.strata[1].local));

    // this instance is the projective-plane example
    CHECK(assemble(spec) == motivic::example_cp2_z3(6));
}

TEST_CASE("loading an explicit series", "[config]") {
    const auto j = json::parse(R"({
        "order": 2,
        "strata": [
            {"class": [0, 1], "local": {"series": [[1], [0, 1], [0, 0, 1]]}, "scale": 1}
        ]
    })");
    const stratification spec = stratification_from_json(j);
    REQUIRE(std::holds_alternative<series>(spec.strata[0].local));
    const series& s = std::get<series>(spec.strata[0].local);
    CHECK(s[0] == polynomial(1));
    CHECK(s[1] == polynomial::lefschetz(1));
    CHECK(s[2] == polynomial::lefschetz(2));
    CHECK(assemble(spec) == pow(s, polynomial::lefschetz(1)));
}

TEST_CASE("trivial class yields the unit series", "[config]") {
    const auto j = json::parse(R"({
        "order": 4,
        "strata": [{"class": [0], "local": {"builtin": "smooth-point-surface", "M": 1}}]
    })");
    CHECK(assemble(stratification_from_json(j)) == series::one(4));
}

TEST_CASE("duplicated strata behave additively", "[config]") {
    const auto twice = json::parse(R"({
        "order": 5,
        "strata": [
            {"class": [1, 2], "local": {"builtin": "smooth-point-surface", "M": 2}},
            {"class": [1, 2], "local": {"builtin": "smooth-point-surface", "M": 2}}
        ]
    })");
    const auto once = json::parse(R"({
        "order": 5,
        "strata": [
            {"class": [2, 4], "local": {"builtin": "smooth-point-surface", "M": 2}}
        ]
    })");
    CHECK(assemble(stratification_from_json(twice)) ==
          assemble(stratification_from_json(once)));
}

TEST_CASE("config rejection", "[config]") {
    auto expect_error = [](const char* text) {
        CHECK_THROWS_AS(stratification_from_json(json::parse(text)), config_error);
    };
    expect_error(R"([])");                                      // not an object
    expect_error(R"({"strata": []})");                          // missing order
    expect_error(R"({"order": -1, "strata": []})");             // negative order
    expect_error(R"({"order": 3})");                            // missing strata
    expect_error(R"({"order": 3, "strata": []})");              // empty strata
    expect_error(R"({"order": 3, "strata": [{}]})");            // missing fields
    expect_error(R"({"order": 3, "strata": [{"class": [1]}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": "x", "local": {"builtin": "smooth-point-surface", "M": 1}}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"builtin": "unknown"}}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"builtin": "origin", "M": 3}}]})");      // missing N, variant
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"builtin": "origin", "M": 0, "N": 1, "variant": 1}}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"builtin": "origin", "M": 3, "N": 1, "variant": 5}}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"series": [[1], [2]]}}]})");             // too short
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {}}]})");
    expect_error(R"({"order": 3, "strata":
        [{"class": [1], "local": {"builtin": "smooth-point-surface", "M": 1}, "scale": 0}]})");
}

TEST_CASE("missing config file", "[config]") {
    CHECK_THROWS_AS(motivic::load_stratification_file("/nonexistent/config.json"),
                    config_error);
}

TEST_CASE("json rendering of series is stable and well-formed", "[config]") {
    series s(2);
    s[0] = polynomial(1);
    s[2] = polynomial::lefschetz(1) - polynomial(7);
    const auto j = motivic::series_to_json(s);
    CHECK(j["order"] == 2);
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][0].dump() == R"([[0,"1"]])");
    CHECK(j["coefficients"][1].dump() == R"([])");
    CHECK(j["coefficients"][2].dump() == R"([[0,"-7"],[1,"1"]])");
    CHECK(j.dump() == motivic::series_to_json(s).dump());

    motivic::log_series l(12);
    l.add(3, 0, 1);
    l.add(12, 2, -1);
    const auto lj = motivic::log_to_json(l);
    CHECK(lj["rows"].dump() == R"([[3,[[0,"1"]]],[12,[[2,"-1"]]]])");
}
