#include "fairdiv/pareto.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "fairdiv/verifiers.hpp"

namespace fairdiv {

bool RatioKey::operator<(const RatioKey& other) const {
    const __int128 lhs = static_cast<__int128>(numerator) * other.denominator;
    const __int128 rhs = static_cast<__int128>(other.numerator) * denominator;
    if (lhs != rhs) return lhs < rhs;
    return tie_class < other.tie_class;
}

bool NashObjective::operator<(const NashObjective& other) const {
    if (nonzero_teams != other.nonzero_teams) return nonzero_teams < other.nonzero_teams;
    return product < other.product;
}

NashObjective nash_objective(const Instance& inst, const Allocation& alloc) {
    NashObjective obj;
    for (int i = 0; i < inst.num_teams; ++i) {
        const Value u = team_utility(inst, alloc, i);
        if (u < 0) throw ValidationError("Nash welfare requires nonnegative team utilities");
        if (u != 0) {
            ++obj.nonzero_teams;
            obj.product *= u;
        }
    }
    return obj;
}

namespace {

// Lowest-index team among the player's rank-1 teams.
int favorite_team(const Instance& inst, int player) {
    for (int i = 0; i < inst.num_teams; ++i)
        if (inst.ranks[player][i] == 1) return i;
    return 0; // unreachable for canonical ranks
}

} // namespace

Allocation alg_adjusted_winner_two_teams(const Instance& inst) {
    if (inst.num_teams != 2)
        throw ValidationError("adjusted winner requires exactly two teams");
    const int m = inst.num_players();

    Allocation alloc;
    alloc.assignment.assign(m, 0);
    std::vector<int> movable; // P+ and P- players, to be sorted by RatioKey
    std::vector<char> in_plus(m, 0);

    for (int p = 0; p < m; ++p) {
        const Value v1 = inst.values[0][p];
        const Value v2 = inst.values[1][p];
        if (v1 == 0 && v2 == 0) {
            alloc.assignment[p] = favorite_team(inst, p);
        } else if (v1 > 0 && v2 > 0) {
            in_plus[p] = 1;
            movable.push_back(p);
            alloc.assignment[p] = 0; // P+ starts with team 1
        } else if (v1 < 0 && v2 < 0) {
            movable.push_back(p);
            alloc.assignment[p] = 1; // P- starts with team 2
        } else if (v1 >= 0 && v2 <= 0) {
            alloc.assignment[p] = 0; // P*_1
        } else {
            alloc.assignment[p] = 1; // P*_2
        }
    }

    const auto key_of = [&](int p) {
        RatioKey key;
        key.numerator = std::abs(inst.values[0][p]);
        key.denominator = std::abs(inst.values[1][p]);
        const Comparison c = prefers(inst, p, 0, 1);
        if (c == Comparison::Equal) {
            key.tie_class = 2;
        } else if (in_plus[p]) {
            key.tie_class = c == Comparison::Worse ? 1 : 3; // prefers team 2 -> early
        } else {
            key.tie_class = c == Comparison::Better ? 1 : 3; // prefers team 1 -> early
        }
        return key;
    };
    std::stable_sort(movable.begin(), movable.end(), [&](int a, int b) {
        const RatioKey ka = key_of(a), kb = key_of(b);
        if (ka < kb) return true;
        if (kb < ka) return false;
        return a < b;
    });

    for (int p : movable) {
        if (ef1_pair_satisfied(inst, alloc, 1, 0)) break; // team 2's envy is within one player
        alloc.assignment[p] = in_plus[p] ? 1 : 0;
    }
    if (!ef1_pair_satisfied(inst, alloc, 1, 0))
        throw std::logic_error("adjusted winner: EF1 not reached after all moves");
    return alloc;
}

Allocation alg_three_teams_identical(const Instance& inst) {
    if (inst.num_teams != 3)
        throw ValidationError("three-team algorithm requires exactly three teams");
    const int m = inst.num_players();
    for (int p = 0; p < m; ++p) {
        for (int i = 1; i < 3; ++i)
            if (inst.values[i][p] != inst.values[0][p])
                throw ValidationError("three-team algorithm requires identical valuations "
                                      "(player " + std::to_string(p) + ")");
        if (inst.values[0][p] < 0)
            throw ValidationError("three-team algorithm requires nonnegative values "
                                  "(player " + std::to_string(p) + ")");
        int favorites = 0;
        for (int i = 0; i < 3; ++i)
            if (inst.ranks[p][i] == 1) ++favorites;
        if (favorites != 1)
            throw ValidationError("player " + std::to_string(p) +
                                  " must have a unique favorite team");
        for (int i = 0; i < 3; ++i)
            if (inst.ranks[p][i] != 1 && inst.ranks[p][i] != 2)
                throw ValidationError("player " + std::to_string(p) +
                                      " must be indifferent between the two other teams");
    }

    Allocation alloc;
    alloc.assignment.assign(m, -1);
    std::array<std::vector<int>, 3> pool; // unassigned players per type
    std::array<Value, 3> value_left{0, 0, 0};
    std::array<Value, 3> current{0, 0, 0};
    int unassigned = 0;
    for (int p = 0; p < m; ++p) {
        const int type = favorite_team(inst, p);
        if (inst.values[0][p] == 0) {
            alloc.assignment[p] = type;
        } else {
            pool[type].push_back(p);
            value_left[type] += inst.values[0][p];
            ++unassigned;
        }
    }

    const auto take = [&](int type, int team) {
        // highest-value player of the type, tie broken by lowest index
        auto& candidates = pool[type];
        std::size_t best = 0;
        for (std::size_t s = 1; s < candidates.size(); ++s)
            if (inst.values[0][candidates[s]] > inst.values[0][candidates[best]]) best = s;
        const int p = candidates[best];
        candidates.erase(candidates.begin() + best);
        value_left[type] -= inst.values[0][p];
        current[team] += inst.values[0][p];
        alloc.assignment[p] = team;
        --unassigned;
    };

    while (unassigned > 0) {
        Value least = std::min({current[0], current[1], current[2]});
        int team = -1;
        for (int i = 0; i < 3; ++i)
            if (current[i] == least && !pool[i].empty()) { team = i; break; }
        if (team < 0)
            for (int i = 0; i < 3; ++i)
                if (current[i] == least) { team = i; break; }

        if (!pool[team].empty()) {
            take(team, team);
            continue;
        }
        const int types_left = (pool[0].empty() ? 0 : 1) + (pool[1].empty() ? 0 : 1) +
                               (pool[2].empty() ? 0 : 1);
        if (types_left == 1) {
            for (int t = 0; t < 3; ++t)
                if (!pool[t].empty()) { take(t, team); break; }
            continue;
        }
        // two foreign types remain; compare their potentials f(S_j) = current + value left
        int j = -1, k = -1;
        for (int t = 0; t < 3; ++t)
            if (t != team && !pool[t].empty()) (j < 0 ? j : k) = t;
        const Value fj = current[j] + value_left[j];
        const Value fk = current[k] + value_left[k];
        take(fj >= fk ? j : k, team);
    }
    return alloc;
}

namespace {

bool next_assignment(std::vector<int>& a, int n) {
    for (int p = static_cast<int>(a.size()) - 1; p >= 0; --p) {
        if (++a[p] < n) return true;
        a[p] = 0;
    }
    return false;
}

void require_nonnegative(const Instance& inst) {
    for (int i = 0; i < inst.num_teams; ++i)
        for (int p = 0; p < inst.num_players(); ++p)
            if (inst.values[i][p] < 0)
                throw ValidationError("all values must be nonnegative");
}

} // namespace

Allocation mnw_bruteforce(const Instance& inst, long long budget) {
    require_nonnegative(inst);
    checked_allocation_count(inst, budget);

    std::vector<Allocation> winners;
    NashObjective best;
    best.nonzero_teams = -1;
    Allocation candidate;
    candidate.assignment.assign(inst.num_players(), 0);
    do {
        NashObjective obj = nash_objective(inst, candidate);
        if (best.nonzero_teams < 0 || best < obj) {
            best = std::move(obj);
            winners.clear();
            winners.push_back(candidate);
        } else if (obj == best) {
            winners.push_back(candidate);
        }
    } while (next_assignment(candidate.assignment, inst.num_teams));

    // First MNW allocation not Pareto-dominated by another MNW allocation.
    for (const Allocation& a : winners) {
        bool dominated = false;
        for (const Allocation& b : winners)
            if (pareto_dominates(inst, b, a, DominanceScope::AllParties)) {
                dominated = true;
                break;
            }
        if (!dominated) return a;
    }
    throw std::logic_error("MNW set has no Pareto-undominated member"); // impossible
}

Allocation alg_dp_const_teams(const Instance& inst, long long cell_budget) {
    require_nonnegative(inst);
    const int n = inst.num_teams;
    const int m = inst.num_players();

    Value vmax = 0;
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < m; ++p) vmax = std::max(vmax, inst.values[i][p]);
    {
        // budget check on n * (1 + m*vmax)^n cells
        long long cells = n;
        const long long side = 1 + static_cast<long long>(m) * vmax;
        for (int i = 0; i < n; ++i) {
            if (cells > cell_budget / side)
                throw CapacityError("DP table exceeds the cell budget of " +
                                    std::to_string(cell_budget));
            cells *= side;
        }
    }

    if (m == 0) return Allocation{};

    // Axis i spans [0, sum of team i's values]; flat row-major indexing.
    std::vector<long long> dim(n), stride(n);
    for (int i = 0; i < n; ++i)
        dim[i] = 1 + std::accumulate(inst.values[i].begin(), inst.values[i].end(), 0LL);
    long long size = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = size;
        size *= dim[i];
    }

    // cell = assignment of the first j players; liveness tracked separately
    std::vector<char> alive(size, 0);
    std::vector<std::vector<std::uint8_t>> cells(size);
    alive[0] = 1;

    // lexicographic happiness comparison over p_{j-1}, ..., p_1
    const auto happier = [&](const std::vector<std::uint8_t>& a,
                             const std::vector<std::uint8_t>& b) {
        for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t) {
            const int ra = inst.ranks[t][a[t]];
            const int rb = inst.ranks[t][b[t]];
            if (ra != rb) return ra < rb;
        }
        return false;
    };

    std::vector<long long> coord(n, 0);
    for (int j = 1; j <= m; ++j) {
        const int p = j - 1;
        std::vector<char> next_alive(size, 0);
        std::vector<std::vector<std::uint8_t>> next_cells(size);
        std::fill(coord.begin(), coord.end(), 0);
        for (long long u = 0; u < size; ++u) {
            int best_team = -1;
            const std::vector<std::uint8_t>* best_prev = nullptr;
            for (int i = 0; i < n; ++i) {
                const Value v = inst.values[i][p];
                if (coord[i] < v) continue;
                const long long prev = u - v * stride[i];
                if (!alive[prev]) continue;
                if (best_team < 0 ||
                    inst.ranks[p][i] < inst.ranks[p][best_team] ||
                    (inst.ranks[p][i] == inst.ranks[p][best_team] &&
                     happier(cells[prev], *best_prev))) {
                    best_team = i;
                    best_prev = &cells[prev];
                }
            }
            if (best_team >= 0) {
                next_alive[u] = 1;
                next_cells[u] = *best_prev;
                next_cells[u].push_back(static_cast<std::uint8_t>(best_team));
            }
            // advance coordinates (row-major odometer)
            for (int i = n - 1; i >= 0; --i) {
                if (++coord[i] < dim[i]) break;
                coord[i] = 0;
            }
        }
        alive.swap(next_alive);
        cells.swap(next_cells);
    }

    // Pick the MNW utility vector; ties resolved toward the lexicographically
    // greatest vector (the scan below visits vectors in ascending order).
    long long best_u = -1;
    NashObjective best_obj;
    std::fill(coord.begin(), coord.end(), 0);
    for (long long u = 0; u < size; ++u) {
        if (alive[u]) {
            NashObjective obj;
            for (int i = 0; i < n; ++i)
                if (coord[i] != 0) {
                    ++obj.nonzero_teams;
                    obj.product *= coord[i];
                }
            if (best_u < 0 || best_obj < obj || obj == best_obj) {
                best_u = u;
                best_obj = std::move(obj);
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++coord[i] < dim[i]) break;
            coord[i] = 0;
        }
    }
    assert(best_u >= 0);

    Allocation result;
    result.assignment.assign(cells[best_u].begin(), cells[best_u].end());
    return result;
}

} // namespace fairdiv
