#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birkit/scenarios.hpp"

using namespace birkit;

TEST_CASE("the registry is complete") {
    std::vector<std::string> expected{
        "unbounded-degree", "pointwise-failure", "moving-lines",
        "sigma-involution", "oscillating-rho",   "homotopy-H",
        "nonlift",          "padic-gate",        "padic-small-subgroups",
        "theorem1-consistency-sweep"};
    const auto& reg = scenario_registry();
    REQUIRE(reg.size() == expected.size());
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].name == expected[i]);
        CHECK(!reg[i].description.empty());
    }
}

TEST_CASE("unknown scenarios are rejected") {
    CHECK_THROWS_AS(run_scenario("no-such-thing"), UnknownScenario);
}

TEST_CASE("reports are deterministic byte for byte") {
    auto a = run_scenario("sigma-involution", 3);
    auto b = run_scenario("sigma-involution", 3);
    CHECK(a.report.dump() == b.report.dump());

    auto c = run_scenario("padic-small-subgroups", 5);
    auto d = run_scenario("padic-small-subgroups", 5);
    CHECK(c.report.dump() == d.report.dump());
}

TEST_CASE("every registered scenario passes") {
    for (const auto& info : scenario_registry()) {
        auto result = run_scenario(info.name, 0);
        INFO(info.name);
        CHECK(result.pass);
        CHECK(result.report["schema"] == 1);
        CHECK(result.report["assertions"].is_array());
        CHECK(!result.report["assertions"].empty());
        for (const auto& a : result.report["assertions"]) {
            CHECK(a.contains("tolerance"));
            CHECK(a.contains("kind"));
        }
    }
}
