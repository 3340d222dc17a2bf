#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Sort key of the adjusted-winner loop: |v_1(p)| / |v_2(p)| compared by
// cross-multiplication, with a tie class ordering equal-ratio players.
struct RatioKey {
    Value numerator = 0;   // |v_1(p)|
    Value denominator = 1; // |v_2(p)|
    int tie_class = 2;     // 1: moves help the player; 2: indifferent; 3: moves hurt

    bool operator<(const RatioKey& other) const;
};

// Nash-welfare objective with the degenerate-case rule: first the number of
// teams with nonzero utility, then the product of those utilities.
struct NashObjective {
    int nonzero_teams = 0;
    boost::multiprecision::cpp_int product = 1;

    bool operator<(const NashObjective& other) const;
    bool operator==(const NashObjective& other) const = default;
};

NashObjective nash_objective(const Instance& instance, const Allocation& allocation);

inline constexpr long long kDefaultDpBudget = 100'000'000;

// Adjusted winner for two teams with arbitrary values: EF1, PO, and team-PO.
Allocation alg_adjusted_winner_two_teams(const Instance& instance);

// Three teams, one shared nonnegative valuation, single-favorite players:
// EF1 and PO via least-value-first assignment.
Allocation alg_three_teams_identical(const Instance& instance);

// Pseudopolynomial DP over utility vectors; nonnegative integer values,
// constant team count. Returns an EF1 and PO allocation.
Allocation alg_dp_const_teams(const Instance& instance, long long cell_budget = kDefaultDpBudget);

// Exhaustive maximum-Nash-welfare search; returns a member of the MNW set
// that no other member Pareto-dominates.
Allocation mnw_bruteforce(const Instance& instance, long long budget = 20'000'000);

} // namespace fairdiv
