#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairdiv/errors.hpp"

namespace fairdiv {

using Value = std::int64_t;

// A fair-division instance: n teams, m players, integer team valuations
// values[i][p], and per-player canonical rank vectors ranks[p][i]
// (1 = most preferred, equal ranks = indifference).
struct Instance {
    int num_teams = 0;
    std::vector<std::string> player_ids;
    std::vector<std::vector<Value>> values; // [team][player]
    std::vector<std::vector<int>> ranks;    // [player][team]

    int num_players() const { return static_cast<int>(player_ids.size()); }

    // Throws ValidationError on dimension mismatch or a broken rank law.
    void validate() const;
};

// Total assignment of players to teams; assignment[p] in [0, n).
struct Allocation {
    std::vector<int> assignment;

    int num_players() const { return static_cast<int>(assignment.size()); }
    bool operator==(const Allocation&) const = default;
};

enum class Comparison { Better, Equal, Worse };

// Rank vectors obeying the canonical law: ranks[p][i] = 1 + #{j : j preferred to i}.
// Rebuilds a canonical rank vector from arbitrary integer keys (lower key = preferred).
std::vector<int> canonical_ranks_from_keys(const std::vector<long long>& keys);

bool ranks_are_canonical(const std::vector<int>& ranks);

// Sum of values[team][p] over players assigned to `team`; exact, with overflow guard.
Value team_utility(const Instance& instance, const Allocation& allocation, int team);

// Compares team_a against team_b from `player`'s point of view.
Comparison prefers(const Instance& instance, int player, int team_a, int team_b);

// JSON serialization (see README for the document formats).
Instance load_instance(const std::string& bytes);
std::string save_instance(const Instance& instance);

Allocation load_allocation(const std::string& bytes, int num_teams);
std::string save_allocation(const Allocation& allocation);

} // namespace fairdiv
