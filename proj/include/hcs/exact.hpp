#pragma once

#include <vector>

#include "hcs/graph.hpp"
#include "hcs/tree.hpp"

namespace hcs {

struct OptResult {
    double value = 0;
    HCTree tree;                          // one optimal binary tree
    std::vector<Cut> optimal_root_cuts;   // every optimal first split; side_a contains vertex 0
};

// Minimum clustering cost over all trees, by subset DP over bitmasks:
//   opt(S) = min over bipartitions (A, S\A) of w(A, S\A)*|S| + opt(A) + opt(S\A).
// Requires 1 <= n <= 16.
OptResult brute_force_opt(const WeightedGraph& g);

// Minimum of cost_lca over an explicit enumeration of every binary tree.
// Exponentially slower than the DP; exists solely to cross-check it. n <= 8.
double exhaustive_opt(const WeightedGraph& g);

// Minimum-weight beta-balanced bipartition of `subset` (edges inside the induced
// subgraph). |subset| <= 20, beta in (0, 1/2]. Ties: lexicographically smallest
// side-a bitmask in ascending-vertex bit order; side_a contains the smallest vertex.
Cut exact_balanced_min_cut(const WeightedGraph& g, const std::vector<Vertex>& subset,
                           double beta);

// True iff (a, b) partitions V and appears among brute_force_opt's optimal root cuts.
bool verify_first_split(const WeightedGraph& g, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b);

}  // namespace hcs
