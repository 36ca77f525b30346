#include "hcs/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hcs/rng.hpp"
#include "hcs/stream.hpp"

namespace hcs {

size_t target_edges(int n, double epsilon, double budget_c) {
    if (!(epsilon > 0) || epsilon >= 1)
        throw std::invalid_argument("sparsify: epsilon must be in (0, 1)");
    if (!(budget_c > 0)) throw std::invalid_argument("sparsify: budget_c must be positive");
    double lg = std::log2(std::max(n, 2));
    return static_cast<size_t>(std::ceil(budget_c * n * lg * lg * lg / (epsilon * epsilon)));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<int> forest_indices(const WeightedGraph& g) {
    const int m = g.m();
    std::vector<int> idx(m, 0);
    std::vector<int> remaining(m);
    std::iota(remaining.begin(), remaining.end(), 0);
    int round = 1;
    while (!remaining.empty()) {
        Dsu dsu(g.n());
        std::vector<int> next;
        for (int ei : remaining) {
            const Edge& e = g.edges()[ei];
            if (dsu.unite(e.u, e.v))
                idx[ei] = round;
            else
                next.push_back(ei);
        }
        remaining = std::move(next);
        ++round;
    }
    return idx;
}

namespace {

// largest rho <= rho_formula with expected kept count <= target (floor rho = 1)
double fit_rho(const std::vector<int>& lam, double rho_formula, size_t target) {
    std::vector<int> sorted = lam;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> inv_suffix(sorted.size() + 1, 0.0);
    for (size_t i = sorted.size(); i-- > 0;)
        inv_suffix[i] = inv_suffix[i + 1] + 1.0 / sorted[i];
    auto expected = [&](double rho) {
        // edges with lam <= rho are kept surely; the rest contribute rho/lam
        size_t k = std::upper_bound(sorted.begin(), sorted.end(), rho) - sorted.begin();
        return static_cast<double>(k) + rho * inv_suffix[k];
    };
    double want = 0.85 * static_cast<double>(target);  // slack for sampling variance
    if (expected(rho_formula) <= want) return rho_formula;
    double lo = 1.0, hi = rho_formula;
    if (expected(lo) > want) return lo;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (expected(mid) <= want ? lo : hi) = mid;
    }
    return lo;
}

WeightedGraph sample_edges(const WeightedGraph& g, double rho, uint64_t seed,
                           SparsifyStats* stats) {
    auto lam = forest_indices(g);
    std::vector<Edge> kept;
    Rng rng(seed);
    for (int i = 0; i < g.m(); ++i) {
        double p = std::min(1.0, rho / lam[i]);
        double u = rng.uniform01();  // always drawn: decisions are weight-scale invariant
        if (u < p) {
            Edge e = g.edges()[i];
            e.w /= p;
            kept.push_back(e);
        }
    }
    if (stats) {
        stats->rho = rho;
        stats->sampled = true;
        stats->edges_out = kept.size();
    }
    return WeightedGraph(g.n(), std::move(kept));
}

// shared by the offline entry point and the merge-and-reduce level reductions
WeightedGraph sparsify_to_target(const WeightedGraph& g, const SparsifyParams& params,
                                 size_t target, SparsifyStats* stats) {
    if (stats) {
        *stats = {};
        stats->edges_in = static_cast<size_t>(g.m());
        stats->edges_out = static_cast<size_t>(g.m());
    }
    if (g.n() < 2 || g.m() == 0) return g;
    if (params.rho_override > 0) return sample_edges(g, params.rho_override, params.seed, stats);
    if (static_cast<size_t>(g.m()) <= target) return g;  // identity fast path

    double lg = std::log2(std::max(g.n(), 2));
    double rho_formula = params.budget_c * lg * lg / (params.epsilon * params.epsilon);
    auto lam = forest_indices(g);
    double rho = fit_rho(lam, std::max(1.0, rho_formula), target);
    return sample_edges(g, rho, params.seed, stats);
}

uint64_t derive_seed(uint64_t base, int level, int k) {
    uint64_t x = base ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(level + 1)) ^
                 (0xbf58476d1ce4e5b9ULL * static_cast<uint64_t>(k + 1));
    x ^= x >> 30;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

WeightedGraph offline_sparsify(const WeightedGraph& g, const SparsifyParams& params,
                               SparsifyStats* stats) {
    size_t target = target_edges(g.n(), params.epsilon, params.budget_c);
    return sparsify_to_target(g, params, target, stats);
}

WeightedGraph stream_sparsify(EdgeStream& stream, const SparsifyParams& params,
                              StreamStats* stats) {
    const int n = stream.n();
    const size_t m_decl = stream.declared_m();
    const size_t cap = target_edges(n, params.epsilon, params.budget_c);

    StreamStats local;
    StreamStats& st = stats ? *stats : local;
    st = {};
    Meter meter;

    if (m_decl <= cap) {
        // everything fits the budget: accumulate and merge, exact output
        std::vector<Edge> buf;
        buf.reserve(m_decl);
        while (auto e = stream.next()) {
            buf.push_back(*e);
            meter.add(3);
        }
        st.edges_in = buf.size();
        st.levels = 1;
        WeightedGraph h(n, std::move(buf));
        st.edges_out = static_cast<size_t>(h.m());
        st.words_peak = meter.words_peak;
        st.passes = stream.passes_used();
        return h;
    }

    // fixpoint for the level count K and per-level threshold T: the worst
    // cascade instant holds one level mid-merge (~4T), every other level
    // brim-full (2T each), and a transient reduction output, which is at most
    // 2T*(K+3) edges, so the threshold is sized to keep that inside cap
    int K = 1;
    size_t T = 16;
    for (int it = 0; it < 64; ++it) {
        T = std::max<size_t>(16, cap / (2 * static_cast<size_t>(K + 3)));
        int K2 = static_cast<int>(
            std::ceil(std::log2(std::max(2.0, static_cast<double>(m_decl) / T))));
        if (K2 <= K) break;
        K = K2;
    }
    // reductions never drop below a spanning forest (strength-1 edges are kept
    // surely), so a threshold under n lets a near-acyclic buffer ricochet
    // upward forever; refuse budgets that cannot clear the forest floor
    if (T < static_cast<size_t>(n))
        throw std::invalid_argument(
            "stream_sparsify: budget of " + std::to_string(cap) +
            " edges is too small for n = " + std::to_string(n) +
            " (per-level buffers must hold at least n edges); raise budget_c or epsilon");
    double eps_i = params.epsilon / (2.0 * std::max(1, K));

    std::vector<std::vector<Edge>> levels(1);
    auto reduce_into = [&](std::vector<Edge>& buf, int level) {
        WeightedGraph bg(n, buf);
        SparsifyParams lp = params;
        lp.epsilon = eps_i;
        lp.rho_override = 0;  // reductions must hit the per-level target or the
                              // cascade cannot drain; the override is offline-only
        lp.seed = derive_seed(params.seed, level, st.reductions);
        SparsifyStats rstats;
        WeightedGraph h = sparsify_to_target(bg, lp, T, &rstats);
        meter.add(3 * static_cast<size_t>(h.m()));  // output coexists with input briefly
        meter.sub(3 * buf.size());
        buf.clear();
        ++st.reductions;
        return h;
    };

    while (auto e = stream.next()) {
        ++st.edges_in;
        levels[0].push_back(*e);
        meter.add(3);
        for (size_t i = 0; i < levels.size(); ++i) {
            if (levels[i].size() < 2 * T) break;
            const size_t before = levels[i].size();
            WeightedGraph h = reduce_into(levels[i], static_cast<int>(i));
            if (i + 1 >= levels.size()) levels.emplace_back();
            for (const auto& he : h.edges()) levels[i + 1].push_back(he);
            // a reduction that failed to shrink (vanishingly rare once T >= n)
            // parks its output until the next trigger re-rolls the seed
            if (static_cast<size_t>(h.m()) >= before) break;
        }
    }

    // union of the level sketches; merging duplicates is an in-place compaction,
    // so the meter shrinks rather than spiking
    size_t stored = 0;
    std::vector<Edge> all;
    for (auto& lv : levels) {
        stored += lv.size();
        all.insert(all.end(), lv.begin(), lv.end());
        lv.clear();
    }
    WeightedGraph h(n, std::move(all));
    meter.sub(3 * stored);
    meter.add(3 * static_cast<size_t>(h.m()));

    st.levels = static_cast<int>(levels.size());
    st.edges_out = static_cast<size_t>(h.m());
    st.words_peak = meter.words_peak;
    st.passes = stream.passes_used();
    return h;
}

}  // namespace hcs
