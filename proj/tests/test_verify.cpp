#include <doctest.h>

#include <filesystem>

#include "orthocover/graph.hpp"
#include "orthocover/verify.hpp"

using namespace orthocover;

TEST_CASE("claim catalogue is stable") {
    const auto catalogue = claim_catalogue();
    REQUIRE(catalogue.size() == 10);
    CHECK(catalogue.front().id == "counterexample-333-no-covering");
    CHECK(catalogue.back().id == "tree-dichotomy");
    CHECK_THROWS_AS(run_claim("no-such-claim", {}), InvalidInput);
}

TEST_CASE("cheap claims pass") {
    VerifyOptions options;
    for (const char* id : {"counterexample-333-no-covering", "counterexample-333-case-replay", "partite-333-ochi",
                           "covering-correspondence", "tree-dichotomy"}) {
        const auto r = run_claim(id, options);
        INFO(id << ": " << r.detail);
        CHECK(r.status == ClaimStatus::Pass);
    }
}

TEST_CASE("a tiny budget makes the covering claim inconclusive, not failed") {
    VerifyOptions options;
    options.budget = 10;
    const auto r = run_claim("counterexample-333-no-covering", options);
    CHECK(r.status == ClaimStatus::Inconclusive);
}

TEST_CASE("reports are deterministic apart from timing") {
    VerifyOptions options;
    options.only = {"tree-dichotomy", "counterexample-333-case-replay"};
    const auto a = verify_paper(options).to_json(false).dump();
    const auto b = verify_paper(options).to_json(false).dump();
    CHECK(a == b);
    const auto report = verify_paper(options);
    REQUIRE(report.claims.size() == 2);
    // Claims are listed by id in the JSON report.
    CHECK(report.to_json(false)["claims"][0]["id"] == "counterexample-333-case-replay");
    CHECK(report.to_json(true)["claims"][0].contains("elapsed_ms"));
    CHECK_FALSE(report.to_json(false)["claims"][0].contains("elapsed_ms"));
}

TEST_CASE("witnesses are written per claim") {
    const auto dir = std::filesystem::temp_directory_path() / "orthocover_witness_test";
    std::filesystem::remove_all(dir);
    VerifyOptions options;
    options.witness_dir = dir.string();
    const auto r = run_claim("partite-333-ochi", options);
    CHECK(r.status == ClaimStatus::Pass);
    CHECK(std::filesystem::exists(dir / "partite-333-ochi"));
    CHECK_FALSE(std::filesystem::is_empty(dir / "partite-333-ochi"));
    std::filesystem::remove_all(dir);
}
