#pragma once

#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Complete (or masked) bipartite graph on k left slots and k right players.
struct WeightedBipartite {
    int size = 0;
    std::vector<std::vector<Value>> weights;        // [slot][player]
    std::optional<std::vector<std::vector<char>>> mask; // admissible edges, if restricted
};

struct MatchingResult {
    std::vector<int> pairs;                 // pairs[slot] = matched player
    Value total_weight = 0;
    std::vector<Value> per_vertex_weights;  // matched edge weight per slot
};

// Exact Hungarian solvers, O(k^3). Throw InfeasibleError when the mask
// admits no perfect matching.
MatchingResult max_weight_perfect_matching(const WeightedBipartite& graph);
MatchingResult min_cost_perfect_matching(const WeightedBipartite& graph);

// Sequential scheme: maximize the weight at slot 0, then slot 1, and so on.
// The per-vertex weight profile is the lexicographic maximum over all
// perfect matchings. Requires a complete (unmasked) graph.
MatchingResult lexicographic_matching(const WeightedBipartite& graph);

} // namespace fairdiv
