#include "fairdiv/justified.hpp"

#include <algorithm>
#include <limits>

#include "fairdiv/verifiers.hpp"

namespace fairdiv {

namespace {

void require_two_identical_nonneg(const Instance& inst) {
    if (inst.num_teams != 2) throw ValidationError("requires exactly two teams");
    for (int p = 0; p < inst.num_players(); ++p) {
        if (inst.values[0][p] != inst.values[1][p])
            throw ValidationError("requires identical valuations (player " +
                                  std::to_string(p) + ")");
        if (inst.values[0][p] < 0)
            throw ValidationError("requires nonnegative values (player " +
                                  std::to_string(p) + ")");
    }
}

} // namespace

ValleyPath build_valley_path(const Instance& inst) {
    require_two_identical_nonneg(inst);
    std::vector<int> side1, side2;
    for (int p = 0; p < inst.num_players(); ++p) {
        if (prefers(inst, p, 1, 0) == Comparison::Better)
            side2.push_back(p);
        else
            side1.push_back(p); // indifferent players side with team 1
    }
    const auto by_value = [&](int a, int b) {
        if (inst.values[0][a] != inst.values[0][b])
            return inst.values[0][a] < inst.values[0][b];
        return a < b;
    };
    std::sort(side1.begin(), side1.end(), by_value);
    std::sort(side2.begin(), side2.end(), by_value);

    ValleyPath path;
    for (auto it = side1.rbegin(); it != side1.rend(); ++it) path.players.push_back(*it);
    for (int p : side2) path.players.push_back(p);
    path.values.reserve(path.players.size());
    path.prefix.assign(1, 0);
    for (int p : path.players) {
        path.values.push_back(inst.values[0][p]);
        path.prefix.push_back(path.prefix.back() + inst.values[0][p]);
    }
    return path;
}

int lumpy_tie(const ValleyPath& path) {
    const int t = static_cast<int>(path.players.size());
    if (t == 0) throw ValidationError("lumpy tie of an empty path");
    const Value total = path.prefix[t];
    for (int j = 1; j <= t; ++j) {
        if (path.prefix[j] >= total - path.prefix[j]) {
            // minimality guarantees the companion inequality
            if (path.prefix[j - 1] > total - path.prefix[j - 1])
                throw std::logic_error("lumpy tie companion inequality violated");
            return j;
        }
    }
    throw std::logic_error("no lumpy tie found"); // impossible for nonnegative values
}

Allocation alg_cut_and_choose_identical(const Instance& inst) {
    require_two_identical_nonneg(inst);
    const int m = inst.num_players();
    Allocation alloc;
    alloc.assignment.assign(m, 0);
    if (m == 0) return alloc;

    const ValleyPath path = build_valley_path(inst);
    const int j = lumpy_tie(path);
    const int t = static_cast<int>(path.players.size());
    const Value left = path.prefix[j - 1];
    const Value right = path.prefix[t] - path.prefix[j];

    for (int pos = 1; pos <= t; ++pos) {
        const int p = path.players[pos - 1];
        if (pos < j)
            alloc.assignment[p] = 0;
        else if (pos > j)
            alloc.assignment[p] = 1;
        else
            alloc.assignment[p] = left >= right ? 1 : 0; // pivot joins the lighter side
    }
    return alloc;
}

std::optional<Allocation> alg_jef_two_teams_search(const Instance& inst) {
    if (inst.num_teams != 2) throw ValidationError("requires exactly two teams");
    const int m = inst.num_players();
    std::vector<char> in_p1(m);
    for (int p = 0; p < m; ++p) {
        if (inst.values[0][p] < 0 || inst.values[1][p] < 0)
            throw ValidationError("requires nonnegative values (player " +
                                  std::to_string(p) + ")");
        const Comparison c = prefers(inst, p, 0, 1);
        if (c == Comparison::Equal)
            throw ValidationError("requires strict preferences (player " +
                                  std::to_string(p) + ")");
        in_p1[p] = c == Comparison::Better;
    }

    constexpr Value kNoThreshold = std::numeric_limits<Value>::min();

    // Candidate thresholds and the number of own-side players at each value;
    // profiles demanding more than that are infeasible and skipped outright.
    const auto side_profiles = [&](int team) {
        std::vector<Value> values;
        for (int p = 0; p < m; ++p) values.push_back(inst.values[team][p]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<std::pair<Value, int>> profiles = {{kNoThreshold, 0}};
        for (Value x : values) {
            int own = 0;
            for (int p = 0; p < m; ++p)
                if ((in_p1[p] != 0) == (team == 0) && inst.values[team][p] == x) ++own;
            for (int count = 1; count <= own; ++count) profiles.emplace_back(x, count);
        }
        return profiles;
    };
    const std::vector<std::pair<Value, int>> w1 = side_profiles(0);
    const std::vector<std::pair<Value, int>> w2 = side_profiles(1);

    std::vector<int> assign(m);
    for (const auto& [x1, n1] : w1) {
        for (const auto& [x2, n2] : w2) {
            std::fill(assign.begin(), assign.end(), -1);
            bool conflict = false;
            const auto put = [&](int p, int team) {
                if (assign[p] == -1)
                    assign[p] = team;
                else if (assign[p] != team)
                    conflict = true;
            };
            for (int p = 0; p < m && !conflict; ++p) {
                if (x1 != kNoThreshold && inst.values[0][p] < x1) put(p, 1);
                if (x2 != kNoThreshold && inst.values[1][p] < x2) put(p, 0);
                if (in_p1[p] && (x1 == kNoThreshold || inst.values[0][p] > x1)) put(p, 0);
                if (!in_p1[p] && (x2 == kNoThreshold || inst.values[1][p] > x2)) put(p, 1);
            }
            if (conflict) continue;

            // Unassigned team-1 fans all have value exactly x1 for team 1; send
            // across the n1 of them that team 2 values most. Symmetrically for team 2.
            const auto fill_side = [&](bool p1_side, int quota, int cross_team) {
                std::vector<int> pool;
                for (int p = 0; p < m; ++p)
                    if (assign[p] == -1 && (in_p1[p] != 0) == p1_side) pool.push_back(p);
                if (quota > static_cast<int>(pool.size())) return false;
                std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
                    return inst.values[cross_team][a] > inst.values[cross_team][b];
                });
                for (std::size_t s = 0; s < pool.size(); ++s)
                    assign[pool[s]] = static_cast<int>(s) < quota ? cross_team
                                                                  : 1 - cross_team;
                return true;
            };
            if (!fill_side(true, n1, 1)) continue;
            if (!fill_side(false, n2, 0)) continue;

            Allocation candidate{assign};
            if (is_ef1(inst, candidate).holds) return candidate;
        }
    }
    return std::nullopt;
}

} // namespace fairdiv
