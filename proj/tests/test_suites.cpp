#include "doctest.h"

#include "qrsym/suites.hpp"

#include "json.hpp"

using namespace qrsym;

TEST_CASE("run config validation") {
    RunConfig cfg;
    cfg.validate();  // defaults are valid

    RunConfig bad = cfg;
    bad.K = 1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.N = 3;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.suites = {"nonsense"};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.h_values = {"0"};  // inadmissible weight
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.format = "csv";  // csv needs exactly the thm1a suite and one h
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.suites = {"thm1a"};
    bad.h_values = {"1"};
    bad.validate();
}

TEST_CASE("config lines") {
    RunConfig cfg;
    cfg.apply_line("h", "1,3/2");
    cfg.apply_line("K", "4");
    cfg.apply_line("suites", "sl2,thm1a");
    CHECK(cfg.h_values == std::vector<std::string>{"1", "3/2"});
    CHECK(cfg.K == 4);
    CHECK_THROWS_AS(cfg.apply_line("bogus", "1"), std::domain_error);
}

TEST_CASE("suite run: statuses and determinism") {
    RunConfig cfg;
    cfg.h_values = {"1", "3/2"};
    cfg.K = 3;
    cfg.N = 4;
    cfg.suites = {"sl2", "thm1a", "thm1b", "octahedron"};
    RunReport rep = run_suites(cfg);
    REQUIRE(rep.results.size() == 4);
    for (const auto& r : rep.results) CHECK(r.status == "pass");
    CHECK(rep.all_must_pass_ok());

    RunReport rep2 = run_suites(cfg);
    CHECK(rep.render() == rep2.render());

    auto parsed = nlohmann::json::parse(rep.render());
    CHECK(parsed["overall"] == "pass");
    CHECK(parsed["conventions"]["f_bracket_rule"] == "[e_i, f_j] = -j f_{i+j}");
}

TEST_CASE("finding suites never fail the run") {
    RunConfig cfg;
    cfg.h_values = {"1", "3/2"};
    cfg.K = 2;
    cfg.N = 4;
    cfg.suites = {"overlay", "burnside", "tensor"};
    RunReport rep = run_suites(cfg);
    for (const auto& r : rep.results) CHECK(r.status == "finding");
    CHECK(rep.all_must_pass_ok());
}

TEST_CASE("must-pass accounting drives the exit status") {
    RunReport rep;
    rep.results.push_back({"sl2", "pass", "{}"});
    rep.results.push_back({"overlay", "finding", "{}"});
    CHECK(rep.all_must_pass_ok());
    rep.results.push_back({"thm1a", "fail", "{}"});
    CHECK(!rep.all_must_pass_ok());
}

TEST_CASE("csv defect table") {
    RunConfig cfg;
    cfg.h_values = {"1"};
    cfg.K = 2;
    cfg.suites = {"thm1a"};
    cfg.format = "csv";
    RunReport rep = run_suites(cfg);
    std::string csv = rep.render();
    CHECK(csv.rfind("i,j,status\n", 0) == 0);
    CHECK(csv.find("2,-2,nonzero") != std::string::npos);
    CHECK(csv.find("-1,1,zero") != std::string::npos);
    CHECK(run_suites(cfg).render() == csv);
}
