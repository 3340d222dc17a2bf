#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fairdiv/toolkit.hpp"
#include "fairdiv/verifiers.hpp"

using namespace fairdiv;

TEST_CASE("generator is deterministic in the seed") {
    GeneratorConfig config;
    config.num_teams = 3;
    config.num_players = 7;
    config.seed = 99;
    const std::string a = save_instance(gen_random_instance(config));
    const std::string b = save_instance(gen_random_instance(config));
    CHECK(a == b);
    config.seed = 100;
    CHECK(a != save_instance(gen_random_instance(config)));
}

TEST_CASE("generator honors sign and preference modes") {
    for (int trial = 0; trial < 40; ++trial) {
        GeneratorConfig config;
        config.num_teams = 2 + trial % 3;
        config.num_players = 1 + trial % 8;
        config.seed = 20000 + trial;

        config.sign_mode = SignMode::NonNegative;
        config.value_lo = 0;
        Instance inst = gen_random_instance(config);
        for (const auto& row : inst.values)
            for (Value v : row) REQUIRE(v >= 0);

        config.sign_mode = SignMode::Binary;
        config.value_hi = 1;
        inst = gen_random_instance(config);
        for (const auto& row : inst.values)
            for (Value v : row) REQUIRE((v == 0 || v == 1));

        config.sign_mode = SignMode::IdenticalTeams;
        config.value_lo = -9;
        config.value_hi = 9;
        inst = gen_random_instance(config);
        for (const auto& row : inst.values) REQUIRE(row == inst.values[0]);

        config.sign_mode = SignMode::Any;
        config.pref_mode = PrefMode::Strict;
        inst = gen_random_instance(config);
        for (const auto& ranks : inst.ranks) {
            std::vector<int> sorted = ranks;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < inst.num_teams; ++i) REQUIRE(sorted[i] == i + 1);
        }

        config.pref_mode = PrefMode::SingleFavorite;
        inst = gen_random_instance(config);
        for (const auto& ranks : inst.ranks) {
            REQUIRE(std::count(ranks.begin(), ranks.end(), 1) == 1);
            REQUIRE(std::count(ranks.begin(), ranks.end(), 2) ==
                    inst.num_teams - 1);
        }
    }
}

TEST_CASE("generator config validation") {
    GeneratorConfig config;
    config.num_teams = 0;
    CHECK_THROWS_AS(config.validate(), ValidationError);
    config.num_teams = 2;
    config.value_lo = 5;
    config.value_hi = 4;
    CHECK_THROWS_AS(config.validate(), ValidationError);
    config.value_lo = -1;
    config.value_hi = 1;
    config.sign_mode = SignMode::Binary;
    CHECK_THROWS_AS(config.validate(), ValidationError);
    CHECK_FALSE(sign_mode_from_name("negative").has_value());
    CHECK(pref_mode_from_name("single-favorite") == PrefMode::SingleFavorite);
}

TEST_CASE("fixture catalog") {
    const std::vector<std::string> names = fixture_names();
    CHECK(names.size() == 8);
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
    for (const std::string& name : names) {
        const Fixture fixture = paper_instance(name);
        CHECK(fixture.name == name);
        CHECK_NOTHROW(fixture.instance.validate());
        CHECK_FALSE(fixture.facts.empty());
    }
    CHECK_THROWS_AS(paper_instance("does-not-exist"), ValidationError);
}

TEST_CASE("algorithm registry") {
    CHECK(algorithm_registry().size() == 8);
    for (const AlgorithmInfo& info : algorithm_registry()) {
        CHECK(find_algorithm(info.name) == &info);
        CHECK_FALSE(info.advertised.empty());
    }
    CHECK(find_algorithm("nope") == nullptr);
}

TEST_CASE("experiment runner") {
    GeneratorConfig config;
    config.num_teams = 2;
    config.num_players = 5;
    config.seed = 400;
    const std::vector<std::string> algs = {"swap-stable-balanced", "double-round-robin"};

    const nlohmann::json report = run_experiment(config, algs, 4);
    CHECK(report.at("trials") == 4);
    CHECK(report.at("rows").size() == 8);
    for (const auto& row : report.at("rows")) {
        CHECK(row.at("decision") == "yes");
        for (const auto& verdict : row.at("verdicts"))
            CHECK(verdict.get<std::string>() == "pass");
    }
    for (const std::string& alg : algs) {
        CHECK(report.at("aggregate").at(alg).at("pass") == 4);
        CHECK(report.at("aggregate").at(alg).at("fail") == 0);
        CHECK(report.at("aggregate").at(alg).at("capacity") == 0);
    }
    // same config, same seeds, same rows (timings aside)
    const nlohmann::json again = run_experiment(config, algs, 4);
    CHECK(again.at("rows")[0].at("assignment") ==
          report.at("rows")[0].at("assignment"));

    const std::string csv = report_to_csv(report);
    CHECK(csv.rfind("trial,seed,algorithm,decision,wall_ms,verdicts\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

    CHECK(run_experiment(config, algs, 0).at("rows").empty());
    CHECK_THROWS_AS(run_experiment(config, {"nope"}, 1), ValidationError);
    CHECK_THROWS_AS(run_experiment(config, algs, -1), ValidationError);
    // incompatible config is rejected up front
    CHECK_THROWS_AS(run_experiment(config, {"three-teams"}, 1), ValidationError);
}

TEST_CASE("rng uniform stays in range") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const long long x = rng.uniform(-3, 5);
        REQUIRE(x >= -3);
        REQUIRE(x <= 5);
    }
    Rng fixed(7);
    Rng fixed2(7);
    for (int i = 0; i < 100; ++i) REQUIRE(fixed.next() == fixed2.next());
    CHECK_THROWS_AS(rng.uniform(2, 1), ValidationError);
}
