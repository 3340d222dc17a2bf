#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/justified.hpp"
#include "fairdiv/toolkit.hpp"
#include "fairdiv/verifiers.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using testutil::make_instance;

namespace {

ValleyPath path_from_values(std::vector<Value> values) {
    ValleyPath path;
    path.prefix.assign(1, 0);
    for (std::size_t t = 0; t < values.size(); ++t) {
        path.players.push_back(static_cast<int>(t));
        path.prefix.push_back(path.prefix.back() + values[t]);
    }
    path.values = std::move(values);
    return path;
}

} // namespace

TEST_CASE("lumpy tie positions") {
    CHECK(lumpy_tie(path_from_values({1, 1, 1, 1})) == 2);
    CHECK(lumpy_tie(path_from_values({3, 1, 1})) == 1);
    CHECK(lumpy_tie(path_from_values({5})) == 1);
    CHECK(lumpy_tie(path_from_values({1, 1, 5})) == 3);
    CHECK(lumpy_tie(path_from_values({0, 0, 0})) == 1);
    CHECK(lumpy_tie(path_from_values({2, 3, 2, 3})) == 2);
    CHECK_THROWS_AS(lumpy_tie(ValleyPath{}), ValidationError);
}

TEST_CASE("valley path ordering") {
    // identical values 4..1; p1,p2 like team 1, p3,p4 like team 2
    const Instance inst = make_instance(
        2, {{4, 3, 2, 1}, {4, 3, 2, 1}}, {{1, 2}, {1, 2}, {2, 1}, {2, 1}});
    const ValleyPath path = build_valley_path(inst);
    // descend over team 1's fans, then ascend over team 2's fans
    CHECK(path.players == std::vector<int>{0, 1, 3, 2});
    CHECK(path.values == std::vector<Value>{4, 3, 1, 2});
    CHECK(path.prefix == std::vector<Value>{0, 4, 7, 8, 10});

    // indifferent players side with team 1
    const Instance indiff = make_instance(
        2, {{2, 5, 1}, {2, 5, 1}}, {{1, 1}, {2, 1}, {1, 2}});
    const ValleyPath mixed = build_valley_path(indiff);
    CHECK(mixed.players == std::vector<int>{0, 2, 1});
    CHECK(mixed.values == std::vector<Value>{2, 1, 5});
}

TEST_CASE("discrete cut and choose") {
    const Instance unanimous = make_instance(
        2, {{1, 1, 1, 1}, {1, 1, 1, 1}}, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    const Allocation alloc = alg_cut_and_choose_identical(unanimous);
    CHECK(alloc.assignment == std::vector<int>{1, 1, 0, 0});
    CHECK(is_ef1(unanimous, alloc).holds);
    CHECK(justified_ef_report(unanimous, alloc).holds);

    // nobody on team 1's side of the valley
    const Instance opposed = make_instance(
        2, {{3, 1}, {3, 1}}, {{2, 1}, {2, 1}});
    const Allocation away = alg_cut_and_choose_identical(opposed);
    CHECK(is_ef1(opposed, away).holds);
    CHECK(justified_ef_report(opposed, away).holds);

    CHECK_THROWS_AS(
        alg_cut_and_choose_identical(make_instance(2, {{1}, {2}}, {{1, 2}})),
        ValidationError);
    CHECK_THROWS_AS(
        alg_cut_and_choose_identical(make_instance(2, {{-1}, {-1}}, {{1, 2}})),
        ValidationError);
}

TEST_CASE("cut and choose guarantees on random identical instances") {
    for (int trial = 0; trial < 200; ++trial) {
        GeneratorConfig config;
        config.num_teams = 2;
        config.num_players = 1 + trial % 12;
        config.value_lo = 0;
        config.value_hi = 6;
        config.sign_mode = SignMode::IdenticalTeams;
        config.seed = 15000 + trial;
        const Instance inst = gen_random_instance(config);
        const Allocation alloc = alg_cut_and_choose_identical(inst);
        REQUIRE(is_ef1(inst, alloc).holds);
        REQUIRE(justified_ef_report(inst, alloc).holds);
    }
}

TEST_CASE("threshold search contract checks") {
    // no EF1 + justified-EF allocation exists here
    const Instance none = make_instance(2, {{3, 3, 2, 2}, {1, 1, 0, 0}},
                                        {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK_FALSE(alg_jef_two_teams_search(none).has_value());

    const Instance weak = make_instance(2, {{1, 1}, {1, 1}}, {{1, 1}, {1, 2}});
    CHECK_THROWS_AS(alg_jef_two_teams_search(weak), ValidationError);
    const Instance negative = make_instance(2, {{-1}, {1}}, {{1, 2}});
    CHECK_THROWS_AS(alg_jef_two_teams_search(negative), ValidationError);
    const Instance three = make_instance(
        3, {{1}, {1}, {1}}, {{1, 2, 3}});
    CHECK_THROWS_AS(alg_jef_two_teams_search(three), ValidationError);
}

TEST_CASE("threshold search agrees with the exhaustive decider") {
    for (int trial = 0; trial < 200; ++trial) {
        GeneratorConfig config;
        config.num_teams = 2;
        config.num_players = 1 + trial % 9;
        config.value_lo = 0;
        config.value_hi = 4;
        config.sign_mode = SignMode::NonNegative;
        config.pref_mode = PrefMode::Strict;
        config.seed = 16000 + trial;
        const Instance inst = gen_random_instance(config);
        const auto fast = alg_jef_two_teams_search(inst);
        const auto brute = exists_ef1_jef_bruteforce(inst);
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) {
            REQUIRE(is_ef1(inst, *fast).holds);
            REQUIRE(justified_ef_report(inst, *fast).holds);
        }
    }
}
