#include "fairdiv/verifiers.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace fairdiv {

using nlohmann::json;

std::string property_name(Property prop) {
    switch (prop) {
        case Property::EF1: return "ef1";
        case Property::EF11: return "ef11";
        case Property::Balanced: return "balanced";
        case Property::SwapStable: return "swap-stable";
        case Property::IndividuallyStable: return "individually-stable";
        case Property::JustifiedEF: return "justified-ef";
        case Property::PO: return "po";
        case Property::TeamPO: return "team-po";
        case Property::PlayerPO: return "player-po";
    }
    return "?";
}

std::optional<Property> property_from_name(const std::string& name) {
    static const std::array<Property, 9> all = {
        Property::EF1,       Property::EF11,        Property::Balanced,
        Property::SwapStable, Property::IndividuallyStable, Property::JustifiedEF,
        Property::PO,        Property::TeamPO,      Property::PlayerPO};
    for (Property p : all)
        if (property_name(p) == name) return p;
    // short aliases used by the CLI
    if (name == "swap") return Property::SwapStable;
    if (name == "is") return Property::IndividuallyStable;
    if (name == "jef") return Property::JustifiedEF;
    return std::nullopt;
}

json PropertyReport::to_json() const {
    return {{"property", property_name(property)}, {"holds", holds}, {"witness", witness}};
}

namespace {

struct BundleStats {
    Value total = 0;            // v_i over the bundle
    Value min_member = 0;       // min over members, 0 if empty
    Value max_member = 0;       // max over members, 0 if empty
    bool empty = true;
};

// Stats of bundle A_j through team i's valuation.
BundleStats bundle_stats(const Instance& inst, const Allocation& alloc, int viewer, int bundle) {
    BundleStats s;
    for (int p = 0; p < alloc.num_players(); ++p) {
        if (alloc.assignment[p] != bundle) continue;
        const Value v = inst.values[viewer][p];
        if (s.empty) {
            s.min_member = s.max_member = v;
            s.empty = false;
        } else {
            s.min_member = std::min(s.min_member, v);
            s.max_member = std::max(s.max_member, v);
        }
        if (__builtin_add_overflow(s.total, v, &s.total))
            throw OverflowError("bundle value exceeds 64-bit range");
    }
    return s;
}

json team_pair_witness(int i, int j) {
    return {{"type", "team-pair"}, {"envier", i}, {"envied", j}};
}

} // namespace

bool ef1_pair_satisfied(const Instance& inst, const Allocation& alloc, int envier, int envied) {
    const BundleStats own = bundle_stats(inst, alloc, envier, envier);
    const BundleStats other = bundle_stats(inst, alloc, envier, envied);
    if (own.total >= other.total) return true;
    // drop one player from the envier's bundle (only helps if negatively valued)
    const Value own_drop = own.empty ? 0 : std::min<Value>(0, own.min_member);
    if (own.total - own_drop >= other.total) return true;
    // drop one player from the envied bundle (only helps if positively valued)
    const Value other_drop = other.empty ? 0 : std::max<Value>(0, other.max_member);
    return own.total >= other.total - other_drop;
}

PropertyReport is_ef1(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_teams; ++i)
        for (int j = 0; j < inst.num_teams; ++j) {
            if (i == j) continue;
            if (!ef1_pair_satisfied(inst, alloc, i, j))
                return {Property::EF1, false, team_pair_witness(i, j)};
        }
    return {Property::EF1, true, nullptr};
}

PropertyReport is_ef11(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_teams; ++i)
        for (int j = 0; j < inst.num_teams; ++j) {
            if (i == j) continue;
            const BundleStats own = bundle_stats(inst, alloc, i, i);
            const BundleStats other = bundle_stats(inst, alloc, i, j);
            const Value own_drop = own.empty ? 0 : std::min<Value>(0, own.min_member);
            const Value other_drop = other.empty ? 0 : std::max<Value>(0, other.max_member);
            if (own.total - own_drop < other.total - other_drop)
                return {Property::EF11, false, team_pair_witness(i, j)};
        }
    return {Property::EF11, true, nullptr};
}

PropertyReport is_balanced(const Instance& inst, const Allocation& alloc) {
    std::vector<int> sizes(inst.num_teams, 0);
    for (int t : alloc.assignment) ++sizes[t];
    for (int i = 0; i < inst.num_teams; ++i)
        for (int j = i + 1; j < inst.num_teams; ++j)
            if (std::abs(sizes[i] - sizes[j]) > 1)
                return {Property::Balanced, false, team_pair_witness(i, j)};
    return {Property::Balanced, true, nullptr};
}

std::optional<std::pair<int, int>> find_beneficial_swap(const Instance& inst,
                                                        const Allocation& alloc) {
    const int m = alloc.num_players();
    for (int p = 0; p < m; ++p) {
        for (int q = p + 1; q < m; ++q) {
            const int i = alloc.assignment[p];
            const int j = alloc.assignment[q];
            if (i == j) continue;
            const Value vi_p = inst.values[i][p], vi_q = inst.values[i][q];
            const Value vj_p = inst.values[j][p], vj_q = inst.values[j][q];
            if (vi_q < vi_p || vj_p < vj_q) continue; // a team would be worse off
            const Comparison cp = prefers(inst, p, j, i); // p moves i -> j
            const Comparison cq = prefers(inst, q, i, j); // q moves j -> i
            if (cp == Comparison::Worse || cq == Comparison::Worse) continue;
            const bool strict = vi_q > vi_p || vj_p > vj_q || cp == Comparison::Better ||
                                cq == Comparison::Better;
            if (strict) return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_beneficial_deviation(const Instance& inst,
                                                             const Allocation& alloc) {
    for (int p = 0; p < alloc.num_players(); ++p) {
        const int i = alloc.assignment[p];
        for (int j = 0; j < inst.num_teams; ++j) {
            if (j == i) continue;
            if (prefers(inst, p, j, i) != Comparison::Better) continue;
            if (inst.values[i][p] <= 0 && inst.values[j][p] >= 0)
                return std::make_pair(p, j);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_justified_envy(const Instance& inst,
                                                       const Allocation& alloc) {
    const int m = alloc.num_players();
    for (int p = 0; p < m; ++p) {
        const int i = alloc.assignment[p];
        for (int q = 0; q < m; ++q) {
            if (q == p) continue;
            const int j = alloc.assignment[q];
            if (j == i) continue;
            if (prefers(inst, p, j, i) == Comparison::Better &&
                inst.values[j][p] > inst.values[j][q])
                return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

PropertyReport swap_stability_report(const Instance& inst, const Allocation& alloc) {
    if (auto swap = find_beneficial_swap(inst, alloc))
        return {Property::SwapStable, false,
                json{{"type", "swap"}, {"p", swap->first}, {"q", swap->second}}};
    return {Property::SwapStable, true, nullptr};
}

PropertyReport individual_stability_report(const Instance& inst, const Allocation& alloc) {
    if (auto dev = find_beneficial_deviation(inst, alloc))
        return {Property::IndividuallyStable, false,
                json{{"type", "deviation"}, {"player", dev->first}, {"team", dev->second}}};
    return {Property::IndividuallyStable, true, nullptr};
}

PropertyReport justified_ef_report(const Instance& inst, const Allocation& alloc) {
    if (auto envy = find_justified_envy(inst, alloc))
        return {Property::JustifiedEF, false,
                json{{"type", "justified-envy"}, {"envier", envy->first}, {"envied", envy->second}}};
    return {Property::JustifiedEF, true, nullptr};
}

bool pareto_dominates(const Instance& inst, const Allocation& candidate,
                      const Allocation& baseline, DominanceScope scope) {
    bool strict = false;
    if (scope != DominanceScope::PlayersOnly) {
        for (int i = 0; i < inst.num_teams; ++i) {
            const Value uc = team_utility(inst, candidate, i);
            const Value ub = team_utility(inst, baseline, i);
            if (uc < ub) return false;
            if (uc > ub) strict = true;
        }
    }
    if (scope != DominanceScope::TeamsOnly) {
        for (int p = 0; p < inst.num_players(); ++p) {
            const int rc = inst.ranks[p][candidate.assignment[p]];
            const int rb = inst.ranks[p][baseline.assignment[p]];
            if (rc > rb) return false;
            if (rc < rb) strict = true;
        }
    }
    return strict;
}

long long checked_allocation_count(const Instance& inst, long long budget) {
    long long count = 1;
    for (int p = 0; p < inst.num_players(); ++p) {
        if (count > budget / inst.num_teams)
            throw CapacityError("n^m allocations exceed the enumeration budget of " +
                                std::to_string(budget) + "; reduce m or n");
        count *= inst.num_teams;
    }
    return count;
}

namespace {

// Lexicographic odometer over assignment vectors; returns false after the last one.
bool next_assignment(std::vector<int>& a, int n) {
    for (int p = static_cast<int>(a.size()) - 1; p >= 0; --p) {
        if (++a[p] < n) return true;
        a[p] = 0;
    }
    return false;
}

} // namespace

PropertyReport is_po_bruteforce(const Instance& inst, const Allocation& alloc,
                                DominanceScope scope, long long budget) {
    checked_allocation_count(inst, budget);
    const Property prop = scope == DominanceScope::AllParties ? Property::PO
                          : scope == DominanceScope::TeamsOnly ? Property::TeamPO
                                                               : Property::PlayerPO;
    Allocation candidate;
    candidate.assignment.assign(inst.num_players(), 0);
    do {
        if (candidate.assignment == alloc.assignment) continue;
        if (pareto_dominates(inst, candidate, alloc, scope))
            return {prop, false,
                    json{{"type", "dominating-allocation"},
                         {"assignment", candidate.assignment}}};
    } while (next_assignment(candidate.assignment, inst.num_teams));
    return {prop, true, nullptr};
}

std::optional<Allocation> exists_ef1_jef_bruteforce(const Instance& inst, long long budget) {
    checked_allocation_count(inst, budget);
    Allocation candidate;
    candidate.assignment.assign(inst.num_players(), 0);
    do {
        if (is_ef1(inst, candidate).holds && !find_justified_envy(inst, candidate))
            return candidate;
    } while (next_assignment(candidate.assignment, inst.num_teams));
    return std::nullopt;
}

} // namespace fairdiv
