#include "fairdiv/instance.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace fairdiv {

using nlohmann::json;

std::vector<int> canonical_ranks_from_keys(const std::vector<long long>& keys) {
    std::vector<int> ranks(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        int below = 0;
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (keys[j] < keys[i]) ++below;
        ranks[i] = 1 + below;
    }
    return ranks;
}

bool ranks_are_canonical(const std::vector<int>& ranks) {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        int below = 0;
        for (std::size_t j = 0; j < ranks.size(); ++j)
            if (ranks[j] < ranks[i]) ++below;
        if (ranks[i] != 1 + below) return false;
    }
    return true;
}

void Instance::validate() const {
    if (num_teams <= 0)
        throw ValidationError("teams: must be a positive integer");
    const int m = num_players();
    if (static_cast<int>(values.size()) != num_teams)
        throw ValidationError("values: expected " + std::to_string(num_teams) + " rows");
    for (int i = 0; i < num_teams; ++i)
        if (static_cast<int>(values[i].size()) != m)
            throw ValidationError("values[" + std::to_string(i) + "]: expected " +
                                  std::to_string(m) + " entries");
    if (static_cast<int>(ranks.size()) != m)
        throw ValidationError("ranks: expected " + std::to_string(m) + " rows");
    for (int p = 0; p < m; ++p) {
        if (static_cast<int>(ranks[p].size()) != num_teams)
            throw ValidationError("players[" + std::to_string(p) + "].ranks: expected " +
                                  std::to_string(num_teams) + " entries");
        for (int i = 0; i < num_teams; ++i)
            if (ranks[p][i] < 1 || ranks[p][i] > num_teams)
                throw ValidationError("players[" + std::to_string(p) + "].ranks[" +
                                      std::to_string(i) + "]: out of range [1, n]");
        if (!ranks_are_canonical(ranks[p]))
            throw ValidationError("players[" + std::to_string(p) +
                                  "].ranks: violates the canonical rank law");
    }
    std::vector<std::string> ids = player_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ValidationError("players: duplicate id");
}

Value team_utility(const Instance& instance, const Allocation& allocation, int team) {
    if (team < 0 || team >= instance.num_teams)
        throw ValidationError("team index out of range");
    if (allocation.num_players() != instance.num_players())
        throw ValidationError("allocation size does not match instance");
    Value sum = 0;
    for (int p = 0; p < allocation.num_players(); ++p) {
        if (allocation.assignment[p] == team) {
            if (__builtin_add_overflow(sum, instance.values[team][p], &sum))
                throw OverflowError("team utility exceeds 64-bit range");
        }
    }
    return sum;
}

Comparison prefers(const Instance& instance, int player, int team_a, int team_b) {
    if (player < 0 || player >= instance.num_players())
        throw ValidationError("player index out of range");
    if (team_a < 0 || team_a >= instance.num_teams || team_b < 0 || team_b >= instance.num_teams)
        throw ValidationError("team index out of range");
    const int ra = instance.ranks[player][team_a];
    const int rb = instance.ranks[player][team_b];
    if (ra < rb) return Comparison::Better;
    if (ra > rb) return Comparison::Worse;
    return Comparison::Equal;
}

namespace {

json parse_or_throw(const std::string& bytes) {
    json doc = json::parse(bytes, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("malformed JSON document");
    return doc;
}

} // namespace

Instance load_instance(const std::string& bytes) {
    json doc = parse_or_throw(bytes);
    if (!doc.is_object()) throw ValidationError("instance: expected a JSON object");
    if (!doc.contains("teams") || !doc["teams"].is_number_integer())
        throw ValidationError("teams: missing or not an integer");
    if (!doc.contains("players") || !doc["players"].is_array())
        throw ValidationError("players: missing or not an array");

    Instance inst;
    inst.num_teams = doc["teams"].get<int>();
    if (inst.num_teams <= 0) throw ValidationError("teams: must be positive");
    const auto& players = doc["players"];
    const int m = static_cast<int>(players.size());
    inst.player_ids.resize(m);
    inst.values.assign(inst.num_teams, std::vector<Value>(m, 0));
    inst.ranks.assign(m, std::vector<int>(inst.num_teams, 0));

    for (int p = 0; p < m; ++p) {
        const auto& entry = players[p];
        const std::string where = "players[" + std::to_string(p) + "]";
        if (!entry.is_object()) throw ValidationError(where + ": expected an object");
        if (!entry.contains("id") || !entry["id"].is_string())
            throw ValidationError(where + ".id: missing or not a string");
        inst.player_ids[p] = entry["id"].get<std::string>();
        if (!entry.contains("values") || !entry["values"].is_array() ||
            static_cast<int>(entry["values"].size()) != inst.num_teams)
            throw ValidationError(where + ".values: expected " +
                                  std::to_string(inst.num_teams) + " integers");
        if (!entry.contains("ranks") || !entry["ranks"].is_array() ||
            static_cast<int>(entry["ranks"].size()) != inst.num_teams)
            throw ValidationError(where + ".ranks: expected " +
                                  std::to_string(inst.num_teams) + " integers");
        for (int i = 0; i < inst.num_teams; ++i) {
            if (!entry["values"][i].is_number_integer())
                throw ValidationError(where + ".values[" + std::to_string(i) +
                                      "]: not an integer");
            if (!entry["ranks"][i].is_number_integer())
                throw ValidationError(where + ".ranks[" + std::to_string(i) +
                                      "]: not an integer");
            inst.values[i][p] = entry["values"][i].get<Value>();
            inst.ranks[p][i] = entry["ranks"][i].get<int>();
        }
    }
    inst.validate();
    return inst;
}

std::string save_instance(const Instance& instance) {
    json players = json::array();
    for (int p = 0; p < instance.num_players(); ++p) {
        json vals = json::array();
        json rks = json::array();
        for (int i = 0; i < instance.num_teams; ++i) {
            vals.push_back(instance.values[i][p]);
            rks.push_back(instance.ranks[p][i]);
        }
        players.push_back({{"id", instance.player_ids[p]},
                           {"values", std::move(vals)},
                           {"ranks", std::move(rks)}});
    }
    json doc = {{"teams", instance.num_teams}, {"players", std::move(players)}};
    return doc.dump(2) + "\n";
}

Allocation load_allocation(const std::string& bytes, int num_teams) {
    json doc = parse_or_throw(bytes);
    if (!doc.is_object() || !doc.contains("assignment") || !doc["assignment"].is_array())
        throw ValidationError("assignment: missing or not an array");
    Allocation alloc;
    const auto& arr = doc["assignment"];
    alloc.assignment.reserve(arr.size());
    for (std::size_t p = 0; p < arr.size(); ++p) {
        if (!arr[p].is_number_integer())
            throw ValidationError("assignment[" + std::to_string(p) + "]: not an integer");
        const int t = arr[p].get<int>();
        if (t < 0 || t >= num_teams)
            throw ValidationError("assignment[" + std::to_string(p) +
                                  "]: team index out of range [0, n)");
        alloc.assignment.push_back(t);
    }
    return alloc;
}

std::string save_allocation(const Allocation& allocation) {
    json doc = {{"assignment", allocation.assignment}};
    return doc.dump() + "\n";
}

} // namespace fairdiv
