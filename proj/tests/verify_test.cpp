#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqp/verify.hpp"

using namespace eqp;

TEST_CASE("the full suite passes at the smallest order") {
    auto results = run_suite(3, "all", 12345);
    CHECK(results.size() > 30);
    for (const auto& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("reports are deterministic and sorted for a fixed seed") {
    auto a = run_suite(3, "forms", 99);
    auto b = run_suite(3, "forms", 99);
    REQUIRE(a.size() == b.size());
    for (size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].id == b[j].id);
        CHECK(a[j].pass == b[j].pass);
        CHECK(a[j].detail == b[j].detail);
        if (j) CHECK(a[j - 1].id < a[j].id);
    }
}

TEST_CASE("even and tiny orders are rejected with an explanation") {
    CHECK_THROWS_AS(run_suite(4, "all", 0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(2, "hopf", 0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(1, "hopf", 0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite(3, "nonsense", 0), std::invalid_argument);
}

TEST_CASE("individual suites report their own families") {
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        auto results = run_suite(3, name, 1);
        CHECK(!results.empty());
        for (const auto& r : results) CHECK(!r.anchor.empty());
    }
}
