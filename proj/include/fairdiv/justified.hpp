#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Players ordered so the shared valuation descends then ascends: team-1 fans
// (value descending) followed by team-2 fans (value ascending).
struct ValleyPath {
    std::vector<int> players;  // original player indices in path order
    std::vector<Value> values; // values[t] = v(players[t])
    std::vector<Value> prefix; // prefix[t] = sum of the first t values
};

// Requires n = 2, identical nonnegative valuations. Indifferent players side
// with team 1.
ValleyPath build_valley_path(const Instance& instance);

// Leftmost 1-based position j whose prefix value weakly exceeds the suffix.
// Throws on an empty path.
int lumpy_tie(const ValleyPath& path);

// Threshold search deciding whether an EF1 and justified EF allocation
// exists for two teams, nonnegative values, strict preferences. O(m^5) worst
// case; infeasible threshold profiles are skipped.
std::optional<Allocation> alg_jef_two_teams_search(const Instance& instance);

// Discrete cut-and-choose over the valley path; always returns an EF1 and
// justified EF allocation for two identical-valuation teams.
Allocation alg_cut_and_choose_identical(const Instance& instance);

} // namespace fairdiv
