#include "fairdiv/stability.hpp"

#include <algorithm>

#include "fairdiv/matching.hpp"

namespace fairdiv {

int slot_team(int slot, int num_teams, SlotOrder order) {
    const int base = slot % num_teams;
    return order == SlotOrder::Forward ? base : num_teams - 1 - base;
}

Allocation alg_swap_stable_balanced(const Instance& inst, SlotOrder order) {
    const int m = inst.num_players();
    const int n = inst.num_teams;
    if (m < 1) throw ValidationError("swap-stable-balanced requires at least one player");

    WeightedBipartite graph;
    graph.size = m;
    graph.weights.assign(m, std::vector<Value>(m));
    for (int q = 0; q < m; ++q) {
        const int team = slot_team(q, n, order);
        for (int p = 0; p < m; ++p) graph.weights[q][p] = inst.values[team][p];
    }

    const MatchingResult mu = lexicographic_matching(graph);

    // Keep only edges as good for the teams as those in mu, then minimize
    // the sum of the players' ranks for their teams.
    WeightedBipartite restricted;
    restricted.size = m;
    restricted.weights.assign(m, std::vector<Value>(m));
    restricted.mask.emplace(m, std::vector<char>(m));
    for (int q = 0; q < m; ++q) {
        const int team = slot_team(q, n, order);
        for (int p = 0; p < m; ++p) {
            (*restricted.mask)[q][p] = graph.weights[q][p] == mu.per_vertex_weights[q];
            restricted.weights[q][p] = inst.ranks[p][team];
        }
    }
    const MatchingResult mu_star = min_cost_perfect_matching(restricted);

    Allocation result;
    result.assignment.assign(m, 0);
    for (int q = 0; q < m; ++q)
        result.assignment[mu_star.pairs[q]] = slot_team(q, n, order);
    return result;
}

namespace {

// Sub-instance over `members` (original player indices) plus `dummies`
// zero-value, all-indifferent players appended after them.
Instance padded_subinstance(const Instance& inst, const std::vector<int>& members,
                            int dummies) {
    Instance sub;
    sub.num_teams = inst.num_teams;
    const int m = static_cast<int>(members.size()) + dummies;
    sub.player_ids.resize(m);
    sub.values.assign(inst.num_teams, std::vector<Value>(m, 0));
    sub.ranks.assign(m, std::vector<int>(inst.num_teams, 1));
    for (std::size_t s = 0; s < members.size(); ++s) {
        const int p = members[s];
        sub.player_ids[s] = inst.player_ids[p];
        for (int i = 0; i < inst.num_teams; ++i) sub.values[i][s] = inst.values[i][p];
        sub.ranks[s] = inst.ranks[p];
    }
    for (int d = 0; d < dummies; ++d)
        sub.player_ids[members.size() + d] = "__dummy" + std::to_string(d);
    return sub;
}

} // namespace

Allocation alg_double_round_robin(const Instance& inst) {
    const int n = inst.num_teams;
    const int m = inst.num_players();

    std::vector<int> plus, minus;
    for (int p = 0; p < m; ++p) {
        Value best = inst.values[0][p];
        for (int i = 1; i < n; ++i) best = std::max(best, inst.values[i][p]);
        (best >= 0 ? plus : minus).push_back(p);
    }

    Allocation result;
    result.assignment.assign(m, 0);
    const auto run_phase = [&](const std::vector<int>& members, SlotOrder order) {
        const int dummies = (n - 1) * static_cast<int>(members.size()) + n;
        const Instance sub = padded_subinstance(inst, members, dummies);
        const Allocation sub_alloc = alg_swap_stable_balanced(sub, order);
        for (std::size_t s = 0; s < members.size(); ++s)
            result.assignment[members[s]] = sub_alloc.assignment[s];
    };
    run_phase(plus, SlotOrder::Forward);
    run_phase(minus, SlotOrder::Backward);
    return result;
}

} // namespace fairdiv
