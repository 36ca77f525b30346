#include "hcs/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

namespace hcs {

namespace {

// weight of edges inside each vertex subset, indexed by bitmask
std::vector<double> inside_weights(const WeightedGraph& g) {
    const int n = g.n();
    std::vector<double> inside(size_t{1} << n, 0.0);
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int low = std::countr_zero(s);
        uint32_t rest = s & (s - 1);
        double out = 0;
        for (const auto& [u, w] : g.neighbors(low))
            if (rest >> u & 1u) out += w;
        inside[s] = inside[rest] + out;
    }
    return inside;
}

std::vector<Vertex> mask_to_set(uint32_t mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

OptResult brute_force_opt(const WeightedGraph& g) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("brute_force_opt: empty graph");
    if (n > 16) throw std::invalid_argument("brute_force_opt: n > 16 not supported");

    OptResult res;
    if (n == 1) {
        res.tree.add_leaf(0);
        res.tree.finish();
        return res;
    }

    const uint32_t full = (1u << n) - 1;
    auto inside = inside_weights(g);
    std::vector<double> opt(full + 1, 0.0);
    std::vector<uint32_t> best_split(full + 1, 0);

    for (uint32_t s = 1; s <= full; ++s) {
        if ((s & (s - 1)) == 0) continue;  // singleton
        uint32_t low = s & ~(s - 1);
        int size = std::popcount(s);
        double best = std::numeric_limits<double>::infinity();
        uint32_t arg = 0;
        for (uint32_t a = (s - 1) & s; a; a = (a - 1) & s) {
            if (!(a & low)) continue;  // fix the representative to visit each bipartition once
            uint32_t b = s ^ a;
            double val = (inside[s] - inside[a] - inside[b]) * size + opt[a] + opt[b];
            if (val < best) {
                best = val;
                arg = a;
            }
        }
        opt[s] = best;
        best_split[s] = arg;
    }

    res.value = opt[full];

    std::function<int(uint32_t)> build = [&](uint32_t mask) -> int {
        if ((mask & (mask - 1)) == 0) return res.tree.add_leaf(std::countr_zero(mask));
        uint32_t a = best_split[mask];
        int left = build(a);
        int right = build(mask ^ a);
        return res.tree.add_internal({left, right});
    };
    build(full);
    res.tree.finish();

    for (uint32_t a = (full - 1) & full; a; a = (a - 1) & full) {
        if (!(a & 1u)) continue;  // side_a keeps vertex 0
        uint32_t b = full ^ a;
        double w = inside[full] - inside[a] - inside[b];
        if (close(w * n + opt[a] + opt[b], res.value)) {
            Cut c;
            c.side_a = mask_to_set(a);
            c.side_b = mask_to_set(b);
            c.weight = w;
            res.optimal_root_cuts.push_back(std::move(c));
        }
    }
    std::reverse(res.optimal_root_cuts.begin(), res.optimal_root_cuts.end());
    return res;
}

namespace {

struct EnumNode {
    int left = -1, right = -1;
    Vertex leaf = -1;
};

void enum_trees(uint32_t mask, std::vector<EnumNode>& arena,
                const std::function<void(int)>& emit) {
    if ((mask & (mask - 1)) == 0) {
        arena.push_back({-1, -1, std::countr_zero(mask)});
        emit(static_cast<int>(arena.size()) - 1);
        arena.pop_back();
        return;
    }
    uint32_t low = mask & ~(mask - 1);
    for (uint32_t a = (mask - 1) & mask; a; a = (a - 1) & mask) {
        if (!(a & low)) continue;
        uint32_t b = mask ^ a;
        enum_trees(a, arena, [&](int l) {
            enum_trees(b, arena, [&](int r) {
                arena.push_back({l, r, -1});
                emit(static_cast<int>(arena.size()) - 1);
                arena.pop_back();
            });
        });
    }
}

}  // namespace

double exhaustive_opt(const WeightedGraph& g) {
    const int n = g.n();
    if (n == 0) throw std::invalid_argument("exhaustive_opt: empty graph");
    if (n > 8) throw std::invalid_argument("exhaustive_opt: n > 8 not supported");
    if (n == 1) return 0;

    double best = std::numeric_limits<double>::infinity();
    std::vector<EnumNode> arena;
    enum_trees((1u << n) - 1, arena, [&](int root) {
        HCTree t;
        std::function<int(int)> conv = [&](int id) -> int {
            const EnumNode& nd = arena[id];
            if (nd.leaf >= 0) return t.add_leaf(nd.leaf);
            int l = conv(nd.left);
            int r = conv(nd.right);
            return t.add_internal({l, r});
        };
        conv(root);
        t.finish();
        best = std::min(best, cost_lca(g, t));
    });
    return best;
}

Cut exact_balanced_min_cut(const WeightedGraph& g, const std::vector<Vertex>& subset,
                           double beta) {
    if (!(beta > 0) || beta > 0.5)
        throw std::invalid_argument("exact_balanced_min_cut: beta must be in (0, 1/2]");
    const int s = static_cast<int>(subset.size());
    if (s < 2)
        throw std::invalid_argument("exact_balanced_min_cut: subset needs at least 2 vertices");
    if (s > 20) throw std::invalid_argument("exact_balanced_min_cut: |subset| > 20 not supported");

    std::vector<Vertex> verts = subset;
    std::sort(verts.begin(), verts.end());
    WeightedGraph sub = g.induced(verts);  // also rejects duplicates / range errors

    int amax = std::min(s - 1, static_cast<int>(std::floor((1 - beta) * s + 1e-9)));
    int amin = s - amax;
    if (amin > amax)
        throw std::invalid_argument("exact_balanced_min_cut: no beta-balanced bipartition of " +
                                    std::to_string(s) + " vertices at beta=" + std::to_string(beta));

    auto inside = inside_weights(sub);
    const uint32_t full = (1u << s) - 1;
    double best = std::numeric_limits<double>::infinity();
    uint32_t best_mask = 0;
    for (uint32_t a = 1; a < full; a += 2) {  // bit 0 = smallest vertex stays on side a
        int k = std::popcount(a);
        if (k < amin || k > amax) continue;
        double w = inside[full] - inside[a] - inside[full ^ a];
        if (w < best) {
            best = w;
            best_mask = a;
        }
    }

    Cut c;
    for (int i = 0; i < s; ++i)
        (best_mask >> i & 1u ? c.side_a : c.side_b).push_back(verts[i]);
    c.weight = best;
    return c;
}

bool verify_first_split(const WeightedGraph& g, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b) {
    if (a.size() + b.size() != static_cast<size_t>(g.n()))
        throw std::invalid_argument("verify_first_split: sides must partition the vertex set");
    std::vector<char> seen(g.n(), 0);
    for (Vertex v : a) {
        if (v < 0 || v >= g.n() || seen[v])
            throw std::invalid_argument("verify_first_split: invalid partition");
        seen[v] = 1;
    }
    for (Vertex v : b) {
        if (v < 0 || v >= g.n() || seen[v])
            throw std::invalid_argument("verify_first_split: invalid partition");
        seen[v] = 1;
    }

    std::vector<Vertex> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!sb.empty() && (sa.empty() || sb[0] == 0)) std::swap(sa, sb);  // canonical: 0 on side a

    OptResult res = brute_force_opt(g);
    for (const Cut& c : res.optimal_root_cuts)
        if (c.side_a == sa && c.side_b == sb) return true;
    return false;
}

}  // namespace hcs
