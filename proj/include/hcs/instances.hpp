#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hcs/graph.hpp"
#include "hcs/tree.hpp"

namespace hcs {

// --- classic families (contiguous ids, uniform weight) ---

WeightedGraph gen_path(int vertices, Weight w = 1);        // vertices-1 edges
WeightedGraph gen_path_edges(int edges, Weight w = 1);     // edges+1 vertices
WeightedGraph gen_cycle(int vertices, Weight w = 1);       // vertices >= 3
WeightedGraph gen_clique(int vertices, Weight w = 1);
WeightedGraph gen_er(int vertices, double p, uint64_t seed, Weight w = 1);

// concatenates blocks with id offsets
WeightedGraph disjoint_union(const std::vector<WeightedGraph>& parts);

// perm[old] = new id; must be a permutation of 0..n-1
WeightedGraph relabel(const WeightedGraph& g, const std::vector<Vertex>& perm);
WeightedGraph permuted(const WeightedGraph& g, uint64_t seed);

// --- noisy-cycle family: few long cycles vs many short ones, padded with paths ---

struct NocInstance {
    WeightedGraph graph;
    int n = 0;  // effective vertex count after rounding down to a multiple of 8k
    int k = 0;
    int case_id = 1;
    int cycles = 0;     // number of cycles
    int cycle_len = 0;  // vertices per cycle
    int paths = 0;      // number of padding paths
    int path_len = 0;   // vertices per path (path_len-1 edges each)
};

// case 1: 2 cycles of n/8 vertices; case 2: n/8k cycles of 2k vertices;
// both plus 3n/4k paths of k vertices. Requires 2 <= k, k^2 < n, n/8 >= 3.
NocInstance gen_noc(int n, int k, int case_id);

// --- one-vs-many-expanders: union of k random matchings of size n/4 ---

struct OvmeInstance {
    WeightedGraph graph;  // merged union; weights count multiplicity
    int n = 0, k = 0, t = 0;
    bool yes_case = true;
    std::vector<int> hidden_class;  // vertex -> class id in 0..t-1
    std::vector<std::vector<std::pair<Vertex, Vertex>>> matchings;  // per player
};

// yes: unconstrained uniform matchings; no: exactly n/4t pairs inside each
// hidden class per player. Requires n % (4t) == 0, k >= 1, t >= 1.
OvmeInstance gen_ovme(int n, int k, int t, bool yes_case, uint64_t seed);

// --- two s-cliques plus uniform random cross edges ---

struct TwoCliqueInstance {
    WeightedGraph graph;  // vertices 0..s-1 and s..2s-1
    int s = 0;
    std::vector<std::pair<Vertex, Vertex>> cross;
};

// cross_edges distinct uniform cross pairs; requires cross_edges <= s*s/2
TwoCliqueInstance gen_two_clique(int s, int cross_edges, uint64_t seed);

// --- four-clique index gadget ---

struct BitMatrix {
    int n = 0;
    std::vector<std::vector<uint8_t>> bits;

    static BitMatrix zeros(int n);
    static BitMatrix random(int n, uint64_t seed);  // iid fair bits
    long ones() const;
    long row_sum(int i) const;
    long col_sum(int j) const;
};

struct IndexGadget {
    WeightedGraph graph;  // 16N vertices
    HCTree prescribed;    // split S1, then S2, then S3|S4; cliques halved inside
    double cost_edge_present = 0;  // prescribed-tree cost if the probed bit were 1
    double cost_edge_absent = 0;   // ... if it were 0
    int N = 0;
    bool edge_present = false;  // the actual probed bit x[i][j]
    bool swapped = false;       // S1 built around the right endpoint
    Vertex endpoint_1 = -1;     // the single outward vertex of S1
    Vertex endpoint_2 = -1;     // ... of S2
    std::array<std::vector<Vertex>, 4> sets;  // S1..S4, each of size 4N, sorted
};

// left vertices 0..N-1 carry the rows of x, right vertices N..2N-1 the
// columns; bipartite edge (a, N+b) present iff x[a][b]. Each S_i is a 4N-clique.
// S1 surrounds the probed endpoint of smaller bipartite degree.
IndexGadget gen_index_gadget(int N, const BitMatrix& x, int i, int j);

// structural conditions on a 4-way equipartition (s = part size, counts are
// numbers of cross edges): e12 <= 1, 1 <= e14 <= e23 <= 3s/8, exactly one
// outward vertex in S1 and in S2, and s^2/64 <= e34 <= 3s^2/64.
bool four_clique_conditions(const WeightedGraph& g,
                            const std::array<std::vector<Vertex>, 4>& parts);

}  // namespace hcs
