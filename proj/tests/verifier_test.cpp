#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "matroid/constructions.hpp"
#include "matroid/verifier.hpp"

#include "../src/scenarios_impl.hpp"

using namespace matroidlab;

TEST_CASE("scenario registry") {
    auto ids = scenario_ids();
    CHECK(ids.size() == 12);
    CHECK(std::find(ids.begin(), ids.end(), "catalog-sanity") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "ag23e-cases") != ids.end());
    Catalog cat;
    CHECK_THROWS_AS(run_scenario(cat, "nosuch"), std::invalid_argument);
}

TEST_CASE("claims are reported in sorted id order with canonical witnesses") {
    Catalog cat;
    ScenarioReport rep = run_scenario(cat, "ag23e-aut");
    CHECK(rep.claims.size() >= 5);
    for (size_t i = 1; i < rep.claims.size(); ++i) CHECK(rep.claims[i - 1].id < rep.claims[i].id);
    for (const auto& c : rep.claims) CHECK(c.status == ClaimStatus::pass);
}

TEST_CASE("report is deterministic across job counts") {
    Catalog cat;
    namespace fs = std::filesystem;
    fs::path a = fs::temp_directory_path() / "matroidlab_rep_a.json";
    fs::path b = fs::temp_directory_path() / "matroidlab_rep_b.json";
    std::ostringstream sink;
    RunOptions opt;
    opt.filter = "membership-spotchecks";
    opt.report_path = a.string();
    opt.jobs = 1;
    run_all(cat, opt, sink);
    opt.report_path = b.string();
    opt.jobs = 3;
    run_all(cat, opt, sink);
    std::ifstream ia(a), ib(b);
    std::string sa((std::istreambuf_iterator<char>(ia)), {});
    std::string sb((std::istreambuf_iterator<char>(ib)), {});
    CHECK(sa == sb);
    CHECK(sa.find("\"millis\": 0") != std::string::npos);
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("injected catalog corruption turns into claim failures") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "matroidlab_verify_corrupt";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    for (const auto& entry : fs::directory_iterator(Catalog::default_data_dir()))
        fs::copy_file(entry.path(), tmp / entry.path().filename());
    std::ifstream in(tmp / "m9.matroid");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    auto pos = text.rfind("0 1 1 2 0");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "0 1 1 2 1");
    in.close();
    std::ofstream(tmp / "m9.matroid") << text;

    Catalog corrupt(tmp.string());
    ScenarioReport rep = run_scenario(corrupt, "catalog-sanity");
    int fails = 0;
    for (const auto& c : rep.claims)
        if (c.status == ClaimStatus::fail) {
            ++fails;
            CHECK_FALSE(c.note.empty());
        }
    CHECK(fails >= 1);
    fs::remove_all(tmp);
}

TEST_CASE("unknown filter is rejected, exit codes add up") {
    Catalog cat;
    std::ostringstream sink;
    RunOptions opt;
    opt.filter = "bogus";
    CHECK_THROWS_AS(run_all(cat, opt, sink), std::invalid_argument);

    RunSummary s;
    s.pass = 5;
    CHECK(s.exit_code(false) == 0);
    s.skipped = 1;
    CHECK(s.exit_code(false) == 0);
    CHECK(s.exit_code(true) == 1);
    s.fail = 1;
    CHECK(s.exit_code(false) == 1);

    // an empty scenario list serializes to an empty report with zero claims
    json empty = report_to_json({}, false);
    CHECK(empty.is_array());
    CHECK(empty.empty());
}

TEST_CASE("guard trips become skipped, never pass") {
    Catalog cat;
    ClaimDef tripping{"trip", [](const Catalog& c) -> ClaimOutcome {
                          modular_cuts(c.get("F7d"), /*node_guard=*/50);
                          return {true, json(), ""};
                      }};
    ClaimExecution out = execute_claim(cat, tripping);
    CHECK(out.status == 2);
    CHECK_FALSE(out.note.empty());

    ClaimDef throwing{"boom", [](const Catalog&) -> ClaimOutcome {
                          throw std::runtime_error("broken claim");
                      }};
    CHECK(execute_claim(cat, throwing).status == 1);
}
