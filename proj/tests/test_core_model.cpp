#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "fairdiv/instance.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using testutil::make_instance;

TEST_CASE("canonical ranks from keys") {
    CHECK(canonical_ranks_from_keys({5, 2, 2}) == std::vector<int>{3, 1, 1});
    CHECK(canonical_ranks_from_keys({0, 1, 2}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_ranks_from_keys({7}) == std::vector<int>{1});
    CHECK(canonical_ranks_from_keys({-1, -1, -1}) == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank law recognizer") {
    CHECK(ranks_are_canonical({1, 2, 2}));
    CHECK(ranks_are_canonical({1, 1, 3}));
    CHECK(ranks_are_canonical({1}));
    CHECK_FALSE(ranks_are_canonical({1, 3, 3}));  // rank 2 skipped
    CHECK_FALSE(ranks_are_canonical({1, 1, 2}));  // two better teams, rank must be 3
    CHECK_FALSE(ranks_are_canonical({2, 3, 4}));  // no rank 1
    CHECK_FALSE(ranks_are_canonical({0, 1}));     // ranks start at 1
}

TEST_CASE("instance JSON round trip") {
    const Instance inst = make_instance(
        2, {{3, -1, 0}, {2, 2, -5}}, {{1, 2}, {1, 1}, {2, 1}});
    const Instance back = load_instance(save_instance(inst));
    CHECK(back.num_teams == inst.num_teams);
    CHECK(back.player_ids == inst.player_ids);
    CHECK(back.values == inst.values);
    CHECK(back.ranks == inst.ranks);
}

TEST_CASE("instance validation failures") {
    CHECK_THROWS_AS(load_instance("not json"), ValidationError);
    CHECK_THROWS_AS(load_instance("[1,2,3]"), ValidationError);
    // broken rank law on the second player
    CHECK_THROWS_AS(load_instance(R"({"teams": 2, "players": [
        {"id": "p1", "values": [1, 1], "ranks": [1, 2]},
        {"id": "p2", "values": [0, 0], "ranks": [2, 2]}]})"),
                    ValidationError);
    // values length disagrees with the team count
    CHECK_THROWS_AS(load_instance(R"({"teams": 2, "players": [
        {"id": "p1", "values": [1], "ranks": [1, 2]}]})"),
                    ValidationError);
    // duplicate ids
    CHECK_THROWS_AS(load_instance(R"({"teams": 1, "players": [
        {"id": "p1", "values": [1], "ranks": [1]},
        {"id": "p1", "values": [2], "ranks": [1]}]})"),
                    ValidationError);
}

TEST_CASE("allocation JSON") {
    Allocation alloc{{0, 1, 1, 0}};
    const Allocation back = load_allocation(save_allocation(alloc), 2);
    CHECK(back == alloc);
    CHECK_THROWS_AS(load_allocation(R"({"assignment": [0, 2]})", 2), ValidationError);
    CHECK_THROWS_AS(load_allocation(R"({"assignment": [-1]})", 2), ValidationError);
    CHECK_THROWS_AS(load_allocation(R"({"nope": []})", 2), ValidationError);
}

TEST_CASE("team utility") {
    const Instance inst = make_instance(
        2, {{3, 3, 2, 2}, {1, 1, 0, 0}}, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    const Allocation alloc{{1, 1, 0, 0}};
    CHECK(team_utility(inst, alloc, 0) == 4);
    CHECK(team_utility(inst, alloc, 1) == 2);
    const Allocation all_first{{0, 0, 0, 0}};
    CHECK(team_utility(inst, all_first, 0) == 10);
    CHECK(team_utility(inst, all_first, 1) == 0);
}

TEST_CASE("team utility overflow guard") {
    const Value huge = std::numeric_limits<Value>::max();
    const Instance inst = make_instance(1, {{huge, huge}}, {{1}, {1}});
    CHECK_THROWS_AS(team_utility(inst, Allocation{{0, 0}}, 0), OverflowError);
}

TEST_CASE("player preference comparisons") {
    const Instance inst =
        make_instance(2, {{1, 1}, {1, 0}}, {{1, 2}, {2, 1}});
    CHECK(prefers(inst, 0, 0, 1) == Comparison::Better);
    CHECK(prefers(inst, 0, 1, 0) == Comparison::Worse);
    CHECK(prefers(inst, 1, 1, 0) == Comparison::Better);
    CHECK(prefers(inst, 0, 0, 0) == Comparison::Equal);
    const Instance indiff = make_instance(2, {{1, -1}, {1, -1}}, {{1, 1}, {1, 1}});
    CHECK(prefers(indiff, 0, 0, 1) == Comparison::Equal);
}
