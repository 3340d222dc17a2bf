#pragma once

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Order in which teams take position slots: slot q serves team q mod n
// (Forward) or team n-1-(q mod n) (Backward).
enum class SlotOrder { Forward, Backward };

int slot_team(int slot, int num_teams, SlotOrder order);

// Round-robin over value slots followed by rank-minimizing reassignment.
// Output is balanced, EF[1,1], and swap stable. Requires m >= 1.
Allocation alg_swap_stable_balanced(const Instance& instance,
                                    SlotOrder order = SlotOrder::Forward);

// Double round robin: nonnegative-max players forward, the rest backward,
// with zero-value dummy padding. Output is EF1, swap stable, and
// individually stable.
Allocation alg_double_round_robin(const Instance& instance);

} // namespace fairdiv
