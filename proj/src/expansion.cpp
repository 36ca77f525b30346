#include "hcs/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcs/rng.hpp"
#include "hcs/spectral.hpp"

namespace hcs {

namespace {

ExpansionEstimate degenerate(bool exact) {
    ExpansionEstimate est;
    est.certified_upper = std::numeric_limits<double>::infinity();
    est.heuristic_lower = exact ? est.certified_upper : 0.0;
    est.exact = exact;
    return est;
}

}  // namespace

ExpansionEstimate exact_expansion(const WeightedGraph& g) {
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("exact_expansion: n > 20 not supported");
    if (n <= 1) return degenerate(true);

    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<double> cut(static_cast<size_t>(full) + 1, 0.0);
    std::vector<double> degw(n);
    for (int v = 0; v < n; ++v) degw[v] = g.weighted_degree(v);

    for (uint32_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        uint32_t rest = s & (s - 1);
        double inner = 0;  // weight from `low` into rest
        for (const auto& [u, w] : g.neighbors(low))
            if (rest >> u & 1u) inner += w;
        cut[s] = cut[rest] + degw[low] - 2 * inner;
    }

    double best = std::numeric_limits<double>::infinity();
    uint32_t best_mask = 0;
    for (uint32_t s = 1; s < full; ++s) {
        int k = std::popcount(s);
        if (2 * k > n) continue;
        double ratio = cut[s] / k;
        if (ratio < best) {
            best = ratio;
            best_mask = s;
        }
    }

    ExpansionEstimate est;
    est.certified_upper = best;
    est.heuristic_lower = best;
    est.exact = true;
    for (int v = 0; v < n; ++v)
        (best_mask >> v & 1u ? est.witness.side_a : est.witness.side_b).push_back(v);
    est.witness.weight = cut[best_mask];
    return est;
}

ExpansionEstimate approx_expansion(const WeightedGraph& g, int sweep_rounds, uint64_t seed) {
    const int n = g.n();
    if (n <= 1) return degenerate(false);

    double best = std::numeric_limits<double>::infinity();
    std::vector<Vertex> best_side;
    double best_weight = 0;

    auto consider = [&](const std::vector<Vertex>& side, double weight) {
        int k = static_cast<int>(side.size());
        if (k == 0 || k == n) return;
        double ratio = weight / std::min(k, n - k);
        if (ratio < best) {
            best = ratio;
            best_side = side;
            best_weight = weight;
        }
    };

    auto comps = g.components();
    if (comps.size() > 1) {
        const auto* smallest = &comps[0];
        for (const auto& c : comps)
            if (c.size() < smallest->size()) smallest = &c;
        consider(*smallest, 0.0);
    }

    for (Vertex v = 0; v < n; ++v) consider({v}, g.weighted_degree(v));

    FiedlerResult fv = fiedler_vector(g, seed);
    {
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return fv.vec[a] < fv.vec[b]; });
        std::vector<char> in(n, 0);
        std::vector<Vertex> prefix;
        double cur = 0;
        for (int i = 0; i + 1 < n; ++i) {
            Vertex v = order[i];
            double inner = 0;
            for (const auto& [u, w] : g.neighbors(v))
                if (in[u]) inner += w;
            cur += g.weighted_degree(v) - 2 * inner;
            in[v] = 1;
            prefix.push_back(v);
            consider(prefix, cur);
        }
    }

    Rng rng(seed);
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int r = 0; r < sweep_rounds; ++r) {
        rng.shuffle(ids);
        std::vector<Vertex> half(ids.begin(), ids.begin() + n / 2);
        std::vector<Vertex> rest(ids.begin() + n / 2, ids.end());
        consider(half, cut_weight(g, half, rest));
    }

    ExpansionEstimate est;
    est.certified_upper = best;
    double dmin = std::numeric_limits<double>::infinity();
    for (Vertex v = 0; v < n; ++v) dmin = std::min(dmin, g.weighted_degree(v));
    est.heuristic_lower = std::min(best, 0.5 * fv.lambda2 * dmin);
    est.exact = false;
    std::vector<char> in(n, 0);
    for (Vertex v : best_side) in[v] = 1;
    est.witness.side_a = best_side;
    for (Vertex v = 0; v < n; ++v)
        if (!in[v]) est.witness.side_b.push_back(v);
    est.witness.weight = best_weight;
    std::sort(est.witness.side_a.begin(), est.witness.side_a.end());
    return est;
}

}  // namespace hcs
