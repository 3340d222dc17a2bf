#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/toolkit.hpp"

namespace testutil {

using fairdiv::Allocation;
using fairdiv::Instance;
using fairdiv::Value;

inline Instance make_instance(int n, std::vector<std::vector<Value>> values,
                              std::vector<std::vector<int>> ranks) {
    Instance inst;
    inst.num_teams = n;
    const int m = static_cast<int>(values.at(0).size());
    inst.player_ids.resize(m);
    for (int p = 0; p < m; ++p) inst.player_ids[p] = "p" + std::to_string(p + 1);
    inst.values = std::move(values);
    inst.ranks = std::move(ranks);
    inst.validate();
    return inst;
}

// Exhaustive definition of the pairwise EF1 condition: drop at most one player
// from exactly one of the two bundles and compare again.
inline bool ef1_pair_oracle(const Instance& inst, const Allocation& alloc, int i, int j) {
    std::vector<int> own, other;
    for (int p = 0; p < inst.num_players(); ++p) {
        if (alloc.assignment[p] == i) own.push_back(p);
        if (alloc.assignment[p] == j) other.push_back(p);
    }
    const auto value_sum = [&](const std::vector<int>& bundle, int skip) {
        Value total = 0;
        for (int p : bundle)
            if (p != skip) total += inst.values[i][p];
        return total;
    };
    if (value_sum(own, -1) >= value_sum(other, -1)) return true;
    for (int p : own)
        if (value_sum(own, p) >= value_sum(other, -1)) return true;
    for (int p : other)
        if (value_sum(own, -1) >= value_sum(other, p)) return true;
    return false;
}

// Same, but one removal from each side is allowed simultaneously.
inline bool ef11_pair_oracle(const Instance& inst, const Allocation& alloc, int i, int j) {
    std::vector<int> own, other;
    for (int p = 0; p < inst.num_players(); ++p) {
        if (alloc.assignment[p] == i) own.push_back(p);
        if (alloc.assignment[p] == j) other.push_back(p);
    }
    const auto value_sum = [&](const std::vector<int>& bundle, int skip) {
        Value total = 0;
        for (int p : bundle)
            if (p != skip) total += inst.values[i][p];
        return total;
    };
    std::vector<int> own_skips = {-1}, other_skips = {-1};
    for (int p : own) own_skips.push_back(p);
    for (int p : other) other_skips.push_back(p);
    for (int a : own_skips)
        for (int b : other_skips)
            if (value_sum(own, a) >= value_sum(other, b)) return true;
    return false;
}

inline bool ef1_oracle(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_teams; ++i)
        for (int j = 0; j < inst.num_teams; ++j)
            if (i != j && !ef1_pair_oracle(inst, alloc, i, j)) return false;
    return true;
}

inline bool ef11_oracle(const Instance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.num_teams; ++i)
        for (int j = 0; j < inst.num_teams; ++j)
            if (i != j && !ef11_pair_oracle(inst, alloc, i, j)) return false;
    return true;
}

template <class Fn>
void for_each_allocation(int n, int m, Fn&& fn) {
    Allocation alloc;
    alloc.assignment.assign(m, 0);
    while (true) {
        fn(static_cast<const Allocation&>(alloc));
        int pos = m - 1;
        while (pos >= 0 && alloc.assignment[pos] == n - 1) alloc.assignment[pos--] = 0;
        if (pos < 0) return;
        ++alloc.assignment[pos];
    }
}

inline Allocation random_allocation(fairdiv::Rng& rng, int n, int m) {
    Allocation alloc;
    alloc.assignment.resize(m);
    for (int p = 0; p < m; ++p)
        alloc.assignment[p] = static_cast<int>(rng.uniform(0, n - 1));
    return alloc;
}

} // namespace testutil
