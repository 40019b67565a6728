#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bnloci/serialization.hpp"

using namespace bnloci;

TEST_CASE("certificate JSON uses the fixed schema and field order") {
    const auto cert = certify_no_grd(11, 3, 10, 2, 8);
    const ordered_json j = to_json(cert);

    std::vector<std::string> top_keys;
    for (auto it = j.begin(); it != j.end(); ++it) top_keys.push_back(it.key());
    CHECK(top_keys == std::vector<std::string>{"query", "conditions", "verdict"});

    std::vector<std::string> query_keys;
    for (auto it = j["query"].begin(); it != j["query"].end(); ++it) query_keys.push_back(it.key());
    CHECK(query_keys == std::vector<std::string>{"g", "r", "d", "rp", "dp"});

    REQUIRE(j["conditions"].is_array());
    REQUIRE_FALSE(j["conditions"].empty());
    for (const auto& c : j["conditions"]) {
        std::vector<std::string> keys;
        for (auto it = c.begin(); it != c.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"name", "lhs", "rhs", "relation", "holds"});
        CHECK(c["lhs"].is_number_integer());
        CHECK(c["rhs"].is_number_integer());
        CHECK(c["holds"].is_boolean());
    }
    CHECK(j["verdict"] == "Certified");

    SECTION("round-trips through a parse") {
        const auto parsed = ordered_json::parse(j.dump());
        CHECK(parsed == j);
        CHECK(parsed["query"]["g"] == 11);
        CHECK(parsed["conditions"].size() == cert.conditions.size());
    }

    SECTION("a failing certificate reports verdict Failed") {
        CHECK(to_json(certify_no_grd(8, 1, 4, 2, 7))["verdict"] == "Failed");
    }
}

TEST_CASE("sweep report serialization") {
    const SweepReport report = theorem_a_sweep(3, 20);
    const ordered_json j = to_json(report);

    std::vector<std::string> top_keys;
    for (auto it = j.begin(); it != j.end(); ++it) top_keys.push_back(it.key());
    CHECK(top_keys == std::vector<std::string>{"kind", "params", "rows", "summary"});
    CHECK(j["kind"] == "TheoremA");
    CHECK(j["params"]["min_g"] == 3);
    CHECK(j["params"]["max_g"] == 20);
    CHECK(j["rows"].size() == report.rows.size());

    SECTION("CSV header and row count") {
        const std::string csv = to_csv(report);
        std::istringstream lines(csv);
        std::string header;
        std::getline(lines, header);
        CHECK(header == "g,r,d,rp,dp,verdict,failing_conditions");
        std::size_t count = 0;
        for (std::string line; std::getline(lines, line);) ++count;
        CHECK(count == report.rows.size());
    }
}

TEST_CASE("rigidity and regeneration serialization") {
    const PicardLatticeParams p(9, 2, 6);
    const auto verdict = check_rigidity(p);
    const ordered_json j = to_json(verdict, p);
    CHECK(j["status"] == "Unknown");
    CHECK(j["query"]["g"] == 9);
    REQUIRE(j["candidates"].is_array());
    REQUIRE_FALSE(j["candidates"].empty());

    const auto outcome = special_grd_exists(8, 1, 4, 2, 7, check_rigidity(PicardLatticeParams(8, 1, 4)));
    const ordered_json jo = to_json(outcome);
    CHECK(jo["status"] == "Exists");
    CHECK(jo["witness"]["d2"] == 3);

    const RegionVertices v = region_vertices(PicardLatticeParams(14, 3, 13));
    const std::string csv = to_csv(v);
    CHECK(csv.rfind("label,x,y\n", 0) == 0);
    CHECK(csv.find("Q+,") != std::string::npos);
    CHECK(csv.find("P4,") != std::string::npos);
}

TEST_CASE("generality report serialization") {
    const ordered_json j = to_json(grd_general_certificate(7, 2, 6));
    CHECK(j["verdict"] == "FailsAt");
    REQUIRE(j["fails_at"].size() == 1);
    CHECK(j["fails_at"][0]["rp"] == 1);
    CHECK(j["fails_at"][0]["dp"] == 4);

    const ordered_json ok = to_json(grd_general_certificate(11, 2, 9));
    CHECK(ok["verdict"] == "GrdGeneralCertified");
    CHECK(ok["fails_at"].empty());
}
