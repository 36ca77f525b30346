#include "hcs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "hcs/exact.hpp"
#include "hcs/rng.hpp"
#include "hcs/spectral.hpp"

namespace hcs {

FinderKind finder_kind_from_name(const std::string& name) {
    if (name == "exact") return FinderKind::exact;
    if (name == "spectral") return FinderKind::spectral_refine;
    if (name == "random") return FinderKind::random_restart;
    throw std::invalid_argument("unknown finder '" + name + "' (exact|spectral|random)");
}

std::string finder_kind_name(FinderKind kind) {
    switch (kind) {
        case FinderKind::exact: return "exact";
        case FinderKind::spectral_refine: return "spectral";
        case FinderKind::random_restart: return "random";
    }
    return "?";
}

namespace {

struct BalanceRange {
    int amin, amax;
    bool feasible() const { return amin <= amax; }
};

BalanceRange balance_range(int s, double beta) {
    int amax = std::min(s - 1, static_cast<int>(std::floor((1 - beta) * s + 1e-9)));
    return {s - amax, amax};
}

void require_beta(double beta) {
    if (!(beta > 0) || beta > 0.5)
        throw std::invalid_argument("beta must be in (0, 1/2]");
}

Cut cut_from_membership(const WeightedGraph& g, const std::vector<char>& in_a) {
    Cut c;
    for (Vertex v = 0; v < g.n(); ++v) (in_a[v] ? c.side_a : c.side_b).push_back(v);
    for (const auto& e : g.edges())
        if (in_a[e.u] != in_a[e.v]) c.weight += e.w;
    if (!c.side_a.empty() && !c.side_b.empty() && c.side_b[0] < c.side_a[0])
        std::swap(c.side_a, c.side_b);
    return c;
}

// greedy balance-preserving single-vertex moves; updates in_a/size_a in place
void refine_membership(const WeightedGraph& g, const BalanceRange& range,
                       std::vector<char>& in_a, int& size_a, int passes) {
    const int k = g.n();
    std::vector<double> to_a(k, 0), to_b(k, 0);
    for (const auto& e : g.edges()) {
        (in_a[e.v] ? to_a : to_b)[e.u] += e.w;
        (in_a[e.u] ? to_a : to_b)[e.v] += e.w;
    }
    for (int pass = 0; pass < passes; ++pass) {
        bool moved_any = false;
        for (int moves = 0; moves < k; ++moves) {
            double best_delta = -1e-12;
            int best_v = -1;
            for (Vertex v = 0; v < k; ++v) {
                int na = in_a[v] ? size_a - 1 : size_a + 1;
                int nb = k - na;
                if (std::max(na, nb) > range.amax || std::min(na, nb) < range.amin) continue;
                // moving v turns its same-side edges into crossing ones and back
                double delta = in_a[v] ? to_a[v] - to_b[v] : to_b[v] - to_a[v];
                if (delta < best_delta) {
                    best_delta = delta;
                    best_v = v;
                }
            }
            if (best_v == -1) break;
            bool was_a = in_a[best_v];
            in_a[best_v] = !was_a;
            size_a += was_a ? -1 : 1;
            for (const auto& [u, w] : g.neighbors(best_v)) {
                (was_a ? to_a : to_b)[u] -= w;
                (was_a ? to_b : to_a)[u] += w;
            }
            moved_any = true;
        }
        if (!moved_any) break;
    }
}

// zero-weight balanced cut from whole components, when one exists
bool component_packing(const WeightedGraph& g, const BalanceRange& range, Cut& out) {
    auto comps = g.components();
    if (comps.size() < 2) return false;
    const int k = g.n();
    std::vector<int> from(k + 1, -2);
    from[0] = -1;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        int c = static_cast<int>(comps[i].size());
        for (int t = k; t >= c; --t)
            if (from[t] == -2 && from[t - c] != -2) from[t] = i;
    }
    int best_t = -1;
    for (int t = range.amin; t <= range.amax; ++t) {
        if (from[t] == -2) continue;
        if (best_t == -1 || std::abs(2 * t - k) < std::abs(2 * best_t - k)) best_t = t;
    }
    if (best_t == -1) return false;
    std::vector<char> in_a(k, 0);
    for (int t = best_t; t > 0;) {
        int i = from[t];
        for (Vertex v : comps[i]) in_a[v] = 1;
        t -= static_cast<int>(comps[i].size());
    }
    out = cut_from_membership(g, in_a);
    return true;
}

Cut sweep_and_refine(const WeightedGraph& g, const BalanceRange& range,
                     const std::vector<Vertex>& order, int refine_passes) {
    const int k = g.n();
    std::vector<char> in(k, 0);
    double cur = 0;
    double best = std::numeric_limits<double>::infinity();
    int best_prefix = -1;
    for (int i = 0; i < k - 1; ++i) {
        Vertex v = order[i];
        double inner = 0;
        for (const auto& [u, w] : g.neighbors(v))
            if (in[u]) inner += w;
        cur += g.weighted_degree(v) - 2 * inner;
        in[v] = 1;
        int a = i + 1;
        if (a < range.amin || a > range.amax) continue;
        if (cur < best) {
            best = cur;
            best_prefix = a;
        }
    }
    std::vector<char> in_a(k, 0);
    for (int i = 0; i < best_prefix; ++i) in_a[order[i]] = 1;
    int size_a = best_prefix;
    refine_membership(g, range, in_a, size_a, refine_passes);
    return cut_from_membership(g, in_a);
}

}  // namespace

Cut spectral_refine_cut(const WeightedGraph& g, double beta, const FinderParams& params) {
    require_beta(beta);
    const int k = g.n();
    if (k < 2) throw std::invalid_argument("spectral_refine_cut: need at least 2 vertices");
    BalanceRange range = balance_range(k, beta);
    if (!range.feasible())
        throw std::invalid_argument("spectral_refine_cut: no beta-balanced bipartition");

    Cut packed;
    if (component_packing(g, range, packed)) return packed;

    std::vector<Vertex> order(k);
    std::iota(order.begin(), order.end(), 0);
    FiedlerResult fv = fiedler_vector(g, params.seed, params.power_iterations);
    bool flat = true;
    for (int v = 1; v < k && flat; ++v) flat = std::abs(fv.vec[v] - fv.vec[0]) < 1e-14;
    if (!flat)  // degenerate spectrum: keep the sorted-id fallback order
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return fv.vec[a] < fv.vec[b]; });
    return sweep_and_refine(g, range, order, params.refine_passes);
}

Cut random_restart_cut(const WeightedGraph& g, double beta, const FinderParams& params) {
    require_beta(beta);
    const int k = g.n();
    if (k < 2) throw std::invalid_argument("random_restart_cut: need at least 2 vertices");
    BalanceRange range = balance_range(k, beta);
    if (!range.feasible())
        throw std::invalid_argument("random_restart_cut: no beta-balanced bipartition");

    Cut packed;
    if (component_packing(g, range, packed)) return packed;

    Rng rng(params.seed);
    std::vector<Vertex> ids(k);
    std::iota(ids.begin(), ids.end(), 0);
    Cut best;
    best.weight = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, params.restarts); ++r) {
        rng.shuffle(ids);
        int a = range.amin + rng.below(range.amax - range.amin + 1);
        std::vector<char> in_a(k, 0);
        for (int i = 0; i < a; ++i) in_a[ids[i]] = 1;
        int size_a = a;
        refine_membership(g, range, in_a, size_a, params.refine_passes);
        Cut c = cut_from_membership(g, in_a);
        if (c.weight < best.weight) best = std::move(c);
    }
    return best;
}

Cut find_balanced_cut(const WeightedGraph& g, double beta, const CutFinder& finder) {
    switch (finder.kind) {
        case FinderKind::exact: {
            if (g.n() > finder.params.exact_cap)
                throw std::invalid_argument("exact finder: graph larger than exact_cap (" +
                                            std::to_string(finder.params.exact_cap) + ")");
            std::vector<Vertex> all(g.n());
            std::iota(all.begin(), all.end(), 0);
            return exact_balanced_min_cut(g, all, beta);
        }
        case FinderKind::spectral_refine:
            return spectral_refine_cut(g, beta, finder.params);
        case FinderKind::random_restart:
            return random_restart_cut(g, beta, finder.params);
    }
    throw std::logic_error("find_balanced_cut: bad finder kind");
}

namespace {

int solve_rec(HCTree& tree, const WeightedGraph& g, const std::vector<Vertex>& ids,
              double beta, const CutFinder& finder, long* cut_calls) {
    const int k = static_cast<int>(ids.size());
    if (k == 1) return tree.add_leaf(ids[0]);
    if (k == 2)
        return tree.add_internal({tree.add_leaf(ids[0]), tree.add_leaf(ids[1])});

    WeightedGraph sub = g.induced(ids);  // ids are sorted: local order = global order

    if (k == 3) {
        // cheapest of the three 1-2 splits; ties keep the smallest singleton
        int best_x = 0;
        double best_w = sub.weighted_degree(0);
        for (int x = 1; x < 3; ++x) {
            double w = sub.weighted_degree(x);
            if (w < best_w) {
                best_w = w;
                best_x = x;
            }
        }
        std::vector<Vertex> rest;
        for (int i = 0; i < 3; ++i)
            if (i != best_x) rest.push_back(ids[i]);
        int single = tree.add_leaf(ids[best_x]);
        int pair = solve_rec(tree, g, rest, beta, finder, cut_calls);
        // smallest id on the left
        if (best_x == 0) return tree.add_internal({single, pair});
        return tree.add_internal({pair, single});
    }

    if (cut_calls) ++*cut_calls;
    Cut cut = find_balanced_cut(sub, beta, finder);
    std::vector<Vertex> left, right;
    left.reserve(cut.side_a.size());
    right.reserve(cut.side_b.size());
    for (Vertex v : cut.side_a) left.push_back(ids[v]);
    for (Vertex v : cut.side_b) right.push_back(ids[v]);
    int lnode = solve_rec(tree, g, left, beta, finder, cut_calls);
    int rnode = solve_rec(tree, g, right, beta, finder, cut_calls);
    return tree.add_internal({lnode, rnode});
}

}  // namespace

HCTree recursive_balanced_hc(const WeightedGraph& g, double beta, const CutFinder& finder,
                             long* cut_calls) {
    require_beta(beta);
    if (g.n() < 1) throw std::invalid_argument("recursive_balanced_hc: empty graph");
    std::vector<Vertex> ids(g.n());
    std::iota(ids.begin(), ids.end(), 0);
    HCTree tree;
    solve_rec(tree, g, ids, beta, finder, cut_calls);
    tree.finish();
    return tree;
}

BalancedLowerBound lower_bound_balanced(const WeightedGraph& g, const CutFinder& finder) {
    BalancedLowerBound lb;
    if (g.n() < 3) {
        lb.certified = true;
        return lb;
    }
    const double beta = 1.0 / 3.0;
    if (finder.kind == FinderKind::exact) {
        if (g.n() > finder.params.exact_cap)
            throw std::invalid_argument("lower_bound_balanced: graph larger than exact_cap");
        std::vector<Vertex> all(g.n());
        std::iota(all.begin(), all.end(), 0);
        lb.witness = exact_balanced_min_cut(g, all, beta);
        lb.certified = true;
    } else {
        lb.witness = find_balanced_cut(g, beta, finder);
        lb.certified = false;
    }
    lb.value = g.n() / 3.0 * lb.witness.weight;
    return lb;
}

CostReport solve_offline(const WeightedGraph& g, double beta, const CutFinder& finder) {
    auto t0 = std::chrono::steady_clock::now();
    CostReport rep;
    rep.tree = recursive_balanced_hc(g, beta, finder, &rep.metrics.cut_calls);
    rep.tree_text = format_tree(rep.tree);
    rep.cost = cost_lca(g, rep.tree);

    CutFinder lb_finder = finder;
    if (g.n() <= 20) lb_finder.kind = FinderKind::exact;
    BalancedLowerBound lb = lower_bound_balanced(g, lb_finder);
    rep.lower_bound = lb.value;
    rep.lb_certified = lb.certified;
    if (lb.value > 0) rep.ratio = rep.cost / lb.value;

    rep.metrics.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace hcs
