#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "hcs/graph.hpp"
#include "hcs/tree.hpp"

namespace hcs {

enum class FinderKind { exact, spectral_refine, random_restart };

struct FinderParams {
    uint64_t seed = 0;
    int restarts = 8;          // random_restart only
    int refine_passes = 3;     // local-move improvement rounds
    int power_iterations = 300;
    int exact_cap = 20;        // exact finder refuses larger subproblems
};

struct CutFinder {
    FinderKind kind = FinderKind::spectral_refine;
    FinderParams params;
};

FinderKind finder_kind_from_name(const std::string& name);  // "exact" | "spectral" | "random"
std::string finder_kind_name(FinderKind kind);

// Minimum-weight beta-balanced bipartition, by the finder's method. The cut's
// side_a always contains the smallest vertex. Heuristic finders are
// seed-deterministic; ties go to the first candidate found.
Cut find_balanced_cut(const WeightedGraph& g, double beta, const CutFinder& finder);

// Fiedler-vector sweep restricted to balanced prefixes, then balance-preserving
// greedy single-vertex moves. Falls back to a sorted-id balanced split when the
// spectral ordering is degenerate. Disconnected graphs first try to realize a
// zero-weight cut by packing whole components.
Cut spectral_refine_cut(const WeightedGraph& g, double beta, const FinderParams& params);

// Best of `restarts` random balanced bipartitions after the same refinement.
Cut random_restart_cut(const WeightedGraph& g, double beta, const FinderParams& params);

// Top-down recursion on beta-balanced minimum cuts (sizes 2 and 3 take the
// cheapest most-balanced split directly). Children are ordered with the
// smallest vertex id on the left, so serialization is deterministic.
HCTree recursive_balanced_hc(const WeightedGraph& g, double beta, const CutFinder& finder,
                             long* cut_calls = nullptr);

struct BalancedLowerBound {
    double value = 0;
    bool certified = false;  // true only when the 1/3-balanced min cut is exact
    Cut witness;
};

// (n/3) * w(minimum 1/3-balanced cut): a lower bound on the optimal clustering
// cost. With a heuristic finder the reported value may overshoot the true bound
// and is flagged non-certified. n < 3 yields a certified 0.
BalancedLowerBound lower_bound_balanced(const WeightedGraph& g, const CutFinder& finder);

struct Metrics {
    size_t words_peak = 0;
    int passes = 0;
    long cut_calls = 0;
    double wall_time_s = 0;
};

struct CostReport {
    double cost = 0;
    double lower_bound = 0;
    bool lb_certified = false;
    double ratio = std::numeric_limits<double>::infinity();  // cost / lower_bound
    HCTree tree;
    std::string tree_text;
    Metrics metrics;
};

// Tree + cost on g + lower bound (exact finder for the bound whenever n <= 20,
// the given finder otherwise).
CostReport solve_offline(const WeightedGraph& g, double beta, const CutFinder& finder);

}  // namespace hcs
