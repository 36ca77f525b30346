#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hcs/graph.hpp"

namespace hcs {

class EdgeStream;

struct SparsifyParams {
    double epsilon = 0.2;
    uint64_t seed = 0;
    // scale constant for both the edge budget (budget_c * n * log2(n)^3 / eps^2)
    // and the oversampling rate (budget_c * log2(n)^2 / eps^2)
    double budget_c = 6.0;
    // > 0: sample at exactly this rate, skipping the formula, the identity fast
    // path and the budget fitting. For calibration and tests; offline only
    // (stream reductions ignore it -- they must meet the per-level target).
    double rho_override = 0;
};

// edge budget: ceil(budget_c * n * log2(n)^3 / eps^2)
size_t target_edges(int n, double epsilon, double budget_c);

// Strength proxy: 1-based index of the spanning forest in which each edge first
// appears when forests are peeled off repeatedly (edges scanned in canonical
// order within a round). Aligned with g.edges().
std::vector<int> forest_indices(const WeightedGraph& g);

struct SparsifyStats {
    size_t edges_in = 0, edges_out = 0;
    double rho = 0;  // sampling rate used; 0 on the identity path
    bool sampled = false;
};

// Keep each edge with p_e = min(1, rho / lambda_e), reweighted to w/p_e.
// Identity fast path when the graph already fits the budget. If the formula rate
// would blow the budget, rho is lowered to fit (never below 1, so strength-1
// edges are always kept).
WeightedGraph offline_sparsify(const WeightedGraph& g, const SparsifyParams& params,
                               SparsifyStats* stats = nullptr);

struct StreamStats {
    size_t edges_in = 0, edges_out = 0;
    size_t words_peak = 0;  // 3 words per stored edge, peak over the pass
    int passes = 1;
    int levels = 0;
    int reductions = 0;
};

// Single-pass merge-and-reduce: level buffers of capacity 2T are sparsified down
// to ~T edges and pushed one level up, with per-level accuracy
// eps_i = eps / (2 * ceil(log2(m / T))). Total stored edges stay within the
// target_edges budget; when the whole stream fits, it is simply accumulated
// (exact output).
WeightedGraph stream_sparsify(EdgeStream& stream, const SparsifyParams& params,
                              StreamStats* stats = nullptr);

}  // namespace hcs
