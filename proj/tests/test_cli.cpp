#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pconf/cli.hpp"

#include <json.hpp>

#include <cstdlib>

using namespace pconf;
using namespace pconf::cli;
using nlohmann::json;

TEST_CASE("complex parsing") {
    CHECK(parse_complex("0.1") == cplx(0.1, 0));
    CHECK(parse_complex("2i") == cplx(0, 2));
    CHECK(parse_complex("i") == cplx(0, 1));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("-1.5+0.25i") == cplx(-1.5, 0.25));
    CHECK(parse_complex("1e-3-2e-1i") == cplx(1e-3, -0.2));
    CHECK(parse_complex("1/4") == cplx(0.25, 0));
    CHECK_THROWS_AS(parse_complex("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("grid and tolerance parsing") {
    auto g = parse_grid("0:4:5");
    REQUIRE(g.size() == 5);
    CHECK(g[1] == cplx(1, 0));
    CHECK(g[4] == cplx(4, 0));
    auto h = parse_grid("0:2i:3");
    CHECK(h[1] == cplx(0, 1));
    CHECK(parse_grid("0.3").size() == 1);
    CHECK_THROWS_AS(parse_grid("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
    auto t = parse_tolerance("c7.u_match=1e-6");
    CHECK(t.first == "c7.u_match");
    CHECK(t.second == 1e-6);
    CHECK_THROWS_AS(parse_tolerance("novalue"), std::invalid_argument);
}

TEST_CASE("umemura output") {
    RunConfig cfg;
    cfg.command = "umemura";
    cfg.nMax = 0;
    RunResult r = run(cfg);
    CHECK(r.exitCode == kExitOk);
    json j = json::parse(r.output);
    CHECK(j["polynomials"].size() == 2);
    CHECK(j["origin"][1]["u_n0"] == "1");
    cfg.nMax = 3;
    cfg.format = Format::Csv;
    r = run(cfg);
    CHECK(r.output.rfind("n,degree,s_n0,u_n0,coefficients\n", 0) == 0);
    CHECK(r.output.find("\n1,1,3/4,") != std::string::npos);  // s_1(0; 1/4) = (2m+1)/2
}

TEST_CASE("half-integer m exits with the identity code") {
    RunConfig cfg;
    cfg.command = "umemura";
    cfg.m = "1/2";
    cfg.nMax = 4;
    CHECK(run(cfg).exitCode == kExitIdentity);
}

TEST_CASE("fredholm at lambda = 1") {
    RunConfig cfg;
    cfg.command = "fredholm";
    cfg.lambda = "1";
    cfg.rGrid = "0:2:3";
    RunResult r = run(cfg);
    REQUIRE(r.exitCode == kExitOk);
    json j = json::parse(r.output);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["logDetNystrom"]["re"] == 0.0);
    CHECK(j["rows"][0]["sigma"]["re"] == 0.0);
    for (int i = 1; i < 3; ++i) {
        double rr = j["rows"][i]["r"]["re"];
        CHECK(std::abs(j["rows"][i]["logDetNystrom"]["re"].get<double>() + rr / 4) < 1e-10);
        CHECK(std::abs(j["rows"][i]["sigma"]["re"].get<double>() + rr / 4) < 1e-8);
    }
}

TEST_CASE("output does not depend on the thread count") {
    RunConfig cfg;
    cfg.command = "monodromy";
    cfg.draws = 30;
    cfg.seed = 11;
    setenv("PCONF_THREADS", "1", 1);
    std::string one = run(cfg).output;
    setenv("PCONF_THREADS", "4", 1);
    CHECK(thread_count() == 4);
    std::string four = run(cfg).output;
    CHECK(one == four);
    json j = json::parse(one);
    CHECK(j["draws"].size() == 30);
    CHECK(j["max"]["d6Residual"].get<double>() < 1e-10);
    unsetenv("PCONF_THREADS");
}

TEST_CASE("verify respects tolerances") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.only = {"5"};
    RunResult ok = run(cfg);
    CHECK(ok.exitCode == kExitOk);
    cfg.tolerances["all"] = 1e-16;
    RunResult bad = run(cfg);
    CHECK(bad.exitCode == kExitIdentity);
    CHECK(json::parse(bad.output)["allPass"] == false);
    cfg.tolerances = {{"no.such.key", 1.0}};
    CHECK(run(cfg).exitCode == kExitUsage);
}

TEST_CASE("usage errors") {
    RunConfig cfg;
    cfg.command = "bogus";
    CHECK(run(cfg).exitCode == kExitUsage);
    cfg.command = "confluence";
    cfg.js = {0};
    CHECK(run(cfg).exitCode == kExitUsage);
}
