#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

enum class Property {
    EF1,
    EF11,
    Balanced,
    SwapStable,
    IndividuallyStable,
    JustifiedEF,
    PO,
    TeamPO,
    PlayerPO,
};

std::string property_name(Property prop);
std::optional<Property> property_from_name(const std::string& name);

// Pass/fail verdict with a concrete witness when the property fails.
struct PropertyReport {
    Property property;
    bool holds = false;
    nlohmann::json witness; // null iff holds

    nlohmann::json to_json() const;
};

// Which parties' welfare participates in a Pareto comparison.
enum class DominanceScope { AllParties, TeamsOnly, PlayersOnly };

inline constexpr long long kDefaultEnumerationBudget = 20'000'000;

// Single ordered pair (i, j) of the EF1 condition: i's envy of j vanishes after
// removing one player from i's bundle or from j's bundle (not both).
bool ef1_pair_satisfied(const Instance& instance, const Allocation& allocation, int envier,
                        int envied);

// Witness on failure: the first violating ordered team pair (i, j) in lexicographic order.
PropertyReport is_ef1(const Instance& instance, const Allocation& allocation);
PropertyReport is_ef11(const Instance& instance, const Allocation& allocation);

PropertyReport is_balanced(const Instance& instance, const Allocation& allocation);

// First pair (p, q) in distinct teams, lexicographic by (min index, max index),
// whose exchange makes some involved party better off and none worse off.
std::optional<std::pair<int, int>> find_beneficial_swap(const Instance& instance,
                                                        const Allocation& allocation);

// First (player, target team) move that helps the player and hurts neither team.
std::optional<std::pair<int, int>> find_beneficial_deviation(const Instance& instance,
                                                             const Allocation& allocation);

// First (p, q) such that p strictly prefers q's team and that team strictly values p over q.
std::optional<std::pair<int, int>> find_justified_envy(const Instance& instance,
                                                       const Allocation& allocation);

PropertyReport swap_stability_report(const Instance& instance, const Allocation& allocation);
PropertyReport individual_stability_report(const Instance& instance,
                                           const Allocation& allocation);
PropertyReport justified_ef_report(const Instance& instance, const Allocation& allocation);

// True iff `candidate` weakly improves every party in scope and strictly improves one.
bool pareto_dominates(const Instance& instance, const Allocation& candidate,
                      const Allocation& baseline, DominanceScope scope);

// Exhaustive n^m scan; witness is the first dominating allocation in
// lexicographic assignment order. Throws CapacityError beyond `budget`.
PropertyReport is_po_bruteforce(const Instance& instance, const Allocation& allocation,
                                DominanceScope scope,
                                long long budget = kDefaultEnumerationBudget);

// First allocation (lexicographic) that is both EF1 and justified EF, if any.
std::optional<Allocation> exists_ef1_jef_bruteforce(
    const Instance& instance, long long budget = kDefaultEnumerationBudget);

// Throws CapacityError if n^m exceeds the budget; otherwise returns n^m.
long long checked_allocation_count(const Instance& instance, long long budget);

} // namespace fairdiv
