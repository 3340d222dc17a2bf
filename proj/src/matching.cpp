#include "fairdiv/matching.hpp"

#include <algorithm>
#include <limits>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

constexpr Value kMaxAbsWeight = 1'000'000'000'000LL; // keeps potentials inside 64 bits
constexpr int kMaxSize = 2000;

void check_graph(const WeightedBipartite& g) {
    if (g.size <= 0) throw ValidationError("matching: size must be positive");
    if (g.size > kMaxSize) throw ValidationError("matching: graph too large");
    if (static_cast<int>(g.weights.size()) != g.size)
        throw ValidationError("matching: weight matrix has wrong row count");
    for (const auto& row : g.weights) {
        if (static_cast<int>(row.size()) != g.size)
            throw ValidationError("matching: weight matrix is not square");
        for (Value w : row)
            if (w > kMaxAbsWeight || w < -kMaxAbsWeight)
                throw OverflowError("matching: |weight| exceeds supported range");
    }
    if (g.mask) {
        if (static_cast<int>(g.mask->size()) != g.size)
            throw ValidationError("matching: mask has wrong row count");
        for (const auto& row : *g.mask)
            if (static_cast<int>(row.size()) != g.size)
                throw ValidationError("matching: mask is not square");
    }
}

// Classic Hungarian algorithm with potentials; cost entries must be nonnegative.
// Returns match[slot] = player minimizing total cost.
std::vector<int> hungarian_min(const std::vector<std::vector<Value>>& cost) {
    const int n = static_cast<int>(cost.size());
    const Value kInf = std::numeric_limits<Value>::max() / 4;
    std::vector<Value> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            Value delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const Value cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> match(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) match[p[j] - 1] = j - 1;
    return match;
}

MatchingResult solve(const WeightedBipartite& g, bool maximize) {
    check_graph(g);
    const int k = g.size;
    // Shift to nonnegative costs; masked edges cost more than any full matching.
    Value lo = std::numeric_limits<Value>::max(), hi = std::numeric_limits<Value>::min();
    for (int q = 0; q < k; ++q)
        for (int p = 0; p < k; ++p) {
            const Value c = maximize ? -g.weights[q][p] : g.weights[q][p];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    const Value span = hi - lo;
    const Value forbidden = span * (k + 1) + 1;
    std::vector<std::vector<Value>> cost(k, std::vector<Value>(k));
    for (int q = 0; q < k; ++q)
        for (int p = 0; p < k; ++p) {
            const bool ok = !g.mask || (*g.mask)[q][p];
            const Value c = maximize ? -g.weights[q][p] : g.weights[q][p];
            cost[q][p] = ok ? c - lo : forbidden;
        }

    const std::vector<int> match = hungarian_min(cost);

    MatchingResult result;
    result.pairs = match;
    result.per_vertex_weights.resize(k);
    for (int q = 0; q < k; ++q) {
        if (g.mask && !(*g.mask)[q][match[q]])
            throw InfeasibleError("no perfect matching exists within the mask");
        const Value w = g.weights[q][match[q]];
        result.per_vertex_weights[q] = w;
        if (__builtin_add_overflow(result.total_weight, w, &result.total_weight))
            throw OverflowError("matching weight exceeds 64-bit range");
    }
    return result;
}

} // namespace

MatchingResult max_weight_perfect_matching(const WeightedBipartite& graph) {
    return solve(graph, /*maximize=*/true);
}

MatchingResult min_cost_perfect_matching(const WeightedBipartite& graph) {
    return solve(graph, /*maximize=*/false);
}

MatchingResult lexicographic_matching(const WeightedBipartite& graph) {
    check_graph(graph);
    if (graph.mask) throw ValidationError("lexicographic matching requires a complete graph");
    const int k = graph.size;

    std::vector<Value> recorded(k, 0);
    MatchingResult last;
    for (int i = 0; i < k; ++i) {
        WeightedBipartite step;
        step.size = k;
        step.weights.assign(k, std::vector<Value>(k, 0));
        step.mask.emplace(k, std::vector<char>(k, 1));
        for (int q = 0; q < k; ++q)
            for (int p = 0; p < k; ++p) {
                if (q < i) {
                    // earlier slots may only keep edges matching their recorded weight
                    (*step.mask)[q][p] = graph.weights[q][p] == recorded[q];
                    step.weights[q][p] = graph.weights[q][p];
                } else if (q == i) {
                    step.weights[q][p] = graph.weights[q][p];
                }
                // slots after i keep weight 0 and stay unrestricted
            }
        last = max_weight_perfect_matching(step);
        recorded[i] = graph.weights[i][last.pairs[i]];
    }

    MatchingResult result;
    result.pairs = last.pairs;
    result.per_vertex_weights = recorded;
    result.total_weight = 0;
    for (Value w : recorded)
        if (__builtin_add_overflow(result.total_weight, w, &result.total_weight))
            throw OverflowError("matching weight exceeds 64-bit range");
    return result;
}

} // namespace fairdiv
