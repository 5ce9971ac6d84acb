#include <doctest.h>

#include <stdexcept>

#include "sopol/report.hpp"
#include "sopol/suites.hpp"

using sopol::Report;
using sopol::SuiteParams;

TEST_SUITE_BEGIN("report");

TEST_CASE("json round trip is lossless") {
    Report r;
    r.suite = "recurrence";
    r.params = {{"r", "2"}, {"alpha", "-1"}, {"nmax", "20"}};
    r.add("mixed-y", "mixed-relation", 1.0 / 3.0, 1e-10);
    r.add("w-three-term", "three-term-recurrence", 7.25e-16, 1e-10);
    r.seconds = 0.125;

    Report back = sopol::report_from_json(sopol::report_to_json(r));
    CHECK(back.suite == r.suite);
    CHECK(back.params == r.params);
    CHECK(back.pass == r.pass);
    CHECK(back.seconds == r.seconds);
    REQUIRE(back.checks.size() == r.checks.size());
    for (size_t i = 0; i < r.checks.size(); ++i) {
        CHECK(back.checks[i].id == r.checks[i].id);
        CHECK(back.checks[i].paper_ref == r.checks[i].paper_ref);
        CHECK(back.checks[i].residual == r.checks[i].residual);
        CHECK(back.checks[i].tol == r.checks[i].tol);
        CHECK(back.checks[i].pass == r.checks[i].pass);
    }
}

TEST_CASE("overall pass tracks every record") {
    Report r;
    r.suite = "demo";
    r.add("good", "x", 1e-12, 1e-9);
    CHECK(r.pass);
    r.add("bad", "x", 1e-3, 1e-9);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.checks[1].pass);

    Report ok;
    ok.suite = "demo2";
    ok.add("fine", "x", 0.0, 0.0);
    std::string agg = sopol::reports_to_json({r, ok}, 1.0);
    CHECK(agg.find("\"pass\": false") != std::string::npos);
    auto back = sopol::reports_from_json(agg);
    REQUIRE(back.size() == 2);
    CHECK_FALSE(back[0].pass);
    CHECK(back[1].pass);
}

TEST_CASE("skipped records pass with a reason") {
    Report r;
    r.suite = "roots";
    r.skip("root-location", "root-location", "precondition not met");
    CHECK(r.pass);
    CHECK(r.checks[0].id.find("precondition not met") != std::string::npos);
}

TEST_CASE("suites are deterministic for a fixed seed") {
    SuiteParams p;
    p.nmax = 8;
    p.seed = 424242;
    Report a = sopol::run_suite("generating", p);
    Report b = sopol::run_suite("generating", p);
    a.seconds = b.seconds = 0.0;
    CHECK(sopol::report_to_json(a) == sopol::report_to_json(b));

    p.seed = 424243;
    Report c = sopol::run_suite("generating", p);
    c.seconds = 0.0;
    CHECK(sopol::report_to_json(a) != sopol::report_to_json(c));
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(sopol::run_suite("no-such-suite", SuiteParams{}),
                    std::invalid_argument);
    CHECK(sopol::suite_names().size() == 10);
}

TEST_SUITE_END();
