#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supalg/report.hpp"

using namespace supalg;

TEST_CASE("json report shape and determinism") {
    SuiteResult a{"iwasawa", {{"n", "2"}}, "pass", {}, "lem:iwasawa", 0.5};
    SuiteResult b{"q1", {{"size", "4"}}, "pass", {"3,1"}, "sec:2.3", 1.5};
    std::string j1 = report_json({a, b}, false);
    std::string j2 = report_json({b, a}, false);  // order-insensitive
    CHECK(j1 == j2);
    CHECK(j1.find("\"schema\": 1") != std::string::npos);
    CHECK(j1.find("timing_ms") == std::string::npos);
    CHECK(report_json({a}, true).find("timing_ms") != std::string::npos);
}

TEST_CASE("fail results always carry a witness") {
    SuiteResult r{"x", {}, "fail", {}, "a", 0};
    enforce_witness_invariant(r);
    REQUIRE(r.witnesses.size() == 1);
    std::string j = report_json({{"x", {}, "fail", {}, "a", 0}}, false);
    CHECK(j.find("unspecified failure") != std::string::npos);
}

TEST_CASE("text report marks statuses") {
    SuiteResult r{"rect", {{"n", "2"}, {"k", "2"}}, "pass", {}, "lem:LR-rect", 0};
    std::string t = report_text({r});
    CHECK(t.find("[PASS] rect") != std::string::npos);
    CHECK(t.find("anchor=lem:LR-rect") != std::string::npos);
}
