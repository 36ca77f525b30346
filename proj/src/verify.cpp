#include "hcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hcs/exact.hpp"
#include "hcs/expansion.hpp"
#include "hcs/graph.hpp"
#include "hcs/instances.hpp"
#include "hcs/rng.hpp"
#include "hcs/sparsify.hpp"
#include "hcs/stream.hpp"
#include "hcs/tree.hpp"

namespace hcs {

namespace {

struct Suite {
    SuiteResult res;
    explicit Suite(std::string name) { res.name = std::move(name); }
    void check(bool ok, const std::string& label) {
        ++res.total;
        if (ok)
            ++res.passed;
        else if (res.failures.size() < 20)
            res.failures.push_back(label);
    }
};

WeightedGraph random_int_graph(int n, double p, int wmax, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.push_back({u, v, 1.0 + rng.below(wmax)});
    return WeightedGraph(n, std::move(edges));
}

SuiteResult suite_formulations(uint64_t seed) {
    Suite s("formulations");
    Rng rng(seed ^ 0x666f726dULL);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + rng.below(11);
        WeightedGraph g = random_int_graph(n, 0.1 + 0.7 * rng.uniform01(), 9, rng);
        HCTree t = random_binary_tree(n, rng);
        s.check(cost_lca(g, t) == cost_cuts(g, t), "pair " + std::to_string(it));
    }
    return s.res;
}

SuiteResult suite_oracle(uint64_t seed) {
    Suite s("oracle");
    Rng rng(seed ^ 0x6f7261ULL);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + rng.below(6);
        WeightedGraph g = random_int_graph(n, 0.3 + 0.5 * rng.uniform01(), 5, rng);
        s.check(brute_force_opt(g).value == exhaustive_opt(g), "graph " + std::to_string(it));
    }
    return s.res;
}

SuiteResult suite_sandwich(uint64_t seed) {
    Suite s("sandwich");
    Rng rng(seed ^ 0x73616e64ULL);
    const double beta = 1.0 / 3.0;
    for (int it = 0; it < 100; ++it) {
        int n = 3 + rng.below(10);
        WeightedGraph g = random_int_graph(n, 0.2 + 0.6 * rng.uniform01(), 6, rng);
        HCTree t = random_balanced_tree(n, beta, rng);
        double c = cost_lca(g, t);
        double w = w_functional(g, t);
        s.check(c <= w && w <= c / beta, "balance " + std::to_string(it));
    }
    for (int it = 0; it < 50; ++it) {
        WeightedGraph g = random_int_graph(16, 0.7, 3, rng);
        HCTree t = random_balanced_tree(16, beta, rng);
        SparsifyParams sp;
        sp.epsilon = 0.2;
        sp.seed = rng.u64();
        sp.rho_override = 6;  // force genuine sampling at this scale
        WeightedGraph h = offline_sparsify(g, sp);
        double cg = cost_lca(g, t);
        double ch = cost_lca(h, t);
        s.check((1 - sp.epsilon) * beta * cg <= ch && ch <= (1 + sp.epsilon) / beta * cg,
                "sparsified " + std::to_string(it));
    }
    return s.res;
}

SuiteResult suite_sparsifier(uint64_t seed) {
    Suite s("sparsifier");
    Rng rng(seed ^ 0x73707273ULL);

    for (int it = 0; it < 10; ++it) {  // desk-scale inputs ride the identity path
        int n = 8 + rng.below(25);
        WeightedGraph g = random_int_graph(n, 0.15, 4, rng);
        SparsifyParams sp;
        sp.seed = rng.u64();
        SparsifyStats st;
        WeightedGraph h = offline_sparsify(g, sp, &st);
        bool same = !st.sampled && h.m() == g.m();
        for (size_t e = 0; same && e < g.edges().size(); ++e)
            same = g.edges()[e].u == h.edges()[e].u && g.edges()[e].v == h.edges()[e].v &&
                   g.edges()[e].w == h.edges()[e].w;
        s.check(same, "identity " + std::to_string(it));
    }

    for (int it = 0; it < 5; ++it) {  // a squeezed budget must actually be honored
        WeightedGraph g = random_int_graph(64, 0.5, 4, rng);
        SparsifyParams sp;
        sp.seed = rng.u64();
        sp.budget_c = 0.001;
        size_t cap = target_edges(64, sp.epsilon, sp.budget_c);
        SparsifyStats st;
        WeightedGraph h = offline_sparsify(g, sp, &st);
        s.check(st.sampled && h.m() >= 1 && h.m() <= cap, "budget " + std::to_string(it));
    }

    for (int it = 0; it < 3; ++it) {  // sampled cut fidelity on a dense instance
        WeightedGraph g = gen_clique(256);
        SparsifyParams sp;
        sp.seed = rng.u64();
        sp.rho_override = 225;
        WeightedGraph h = offline_sparsify(g, sp);
        bool ok = true;
        std::vector<Vertex> all(256), side;
        std::iota(all.begin(), all.end(), 0);
        for (Vertex v = 0; v < 256 && ok; ++v) {
            std::vector<Vertex> rest;
            for (Vertex u = 0; u < 256; ++u)
                if (u != v) rest.push_back(u);
            double w = cut_weight(h, {v}, rest);
            ok = w >= 0.8 * 255 && w <= 1.2 * 255;
        }
        for (int r = 0; r < 20 && ok; ++r) {
            rng.shuffle(all);
            std::vector<Vertex> a(all.begin(), all.begin() + 128),
                b(all.begin() + 128, all.end());
            double w = cut_weight(h, a, b);
            ok = w >= 0.8 * 128 * 128 && w <= 1.2 * 128 * 128;
        }
        s.check(ok, "fidelity " + std::to_string(it));
    }

    for (int it = 0; it < 3; ++it) {  // small streams come back exactly, in one pass
        WeightedGraph g = random_int_graph(24, 0.3, 4, rng);
        EdgeStream st = EdgeStream::from_graph(g, StreamOrder::shuffled, rng.u64());
        SparsifyParams sp;
        sp.seed = rng.u64();
        StreamStats stats;
        WeightedGraph h = stream_sparsify(st, sp, &stats);
        bool same = h.m() == g.m() && stats.passes == 1 && stats.words_peak == 3 * g.m();
        for (size_t e = 0; same && e < g.edges().size(); ++e)
            same = g.edges()[e].u == h.edges()[e].u && g.edges()[e].v == h.edges()[e].v &&
                   g.edges()[e].w == h.edges()[e].w;
        s.check(same, "stream-identity " + std::to_string(it));
    }

    for (int it = 0; it < 2; ++it) {  // merge-and-reduce keeps within the word budget
        WeightedGraph g = gen_clique(256);
        EdgeStream st = EdgeStream::from_graph(g, StreamOrder::shuffled, rng.u64());
        SparsifyParams sp;
        sp.seed = rng.u64();
        sp.budget_c = 0.005;
        size_t cap = target_edges(256, sp.epsilon, sp.budget_c);
        StreamStats stats;
        WeightedGraph h = stream_sparsify(st, sp, &stats);
        s.check(stats.passes == 1 && stats.words_peak <= 3 * cap && h.m() < g.m(),
                "stream-budget " + std::to_string(it));
    }
    return s.res;
}

SuiteResult suite_split_weak(uint64_t seed) {
    Suite s("split-weak");
    Rng rng(seed ^ 0x7765616bULL);
    for (int it = 0; it < 30; ++it) {
        int size = 2 + rng.below(6);
        int cross = rng.below(size * size / 2 + 1);
        TwoCliqueInstance inst = gen_two_clique(size, cross, rng.u64());
        std::vector<Vertex> left(size), right(size);
        std::iota(left.begin(), left.end(), 0);
        std::iota(right.begin(), right.end(), size);
        s.check(verify_first_split(inst.graph, left, right),
                "gadget " + std::to_string(it) + " s=" + std::to_string(size) +
                    " cross=" + std::to_string(cross));
    }
    return s.res;
}

SuiteResult suite_split_strong(uint64_t seed) {
    Suite s("split-strong");
    Rng rng(seed ^ 0x7374726fULL);
    for (int N = 2; N <= 3; ++N) {
        for (int rep = 0; rep < 2; ++rep) {
            BitMatrix x = BitMatrix::random(N, rng.u64());
            int i = rng.below(N), j = rng.below(N);
            IndexGadget gad = gen_index_gadget(N, x, i, j);
            double expected = gad.edge_present ? gad.cost_edge_present : gad.cost_edge_absent;
            double actual = cost_lca(gad.graph, gad.prescribed);
            std::string tag = "N=" + std::to_string(N) + " rep=" + std::to_string(rep);
            s.check(actual == expected, "closed-form " + tag);
            bool beats = true;
            for (int alt = 0; alt < 200 && beats; ++alt) {
                HCTree t = random_balanced_tree(16 * N, 1.0 / 3.0, rng);
                beats = cost_lca(gad.graph, t) > actual;
            }
            s.check(beats, "beats-random " + tag);
        }
    }
    return s.res;
}

SuiteResult suite_expansion(uint64_t seed) {
    Suite s("expansion");
    Rng rng(seed ^ 0x65787061ULL);
    auto phi = [](const WeightedGraph& g) { return exact_expansion(g).certified_upper; };
    s.check(phi(gen_clique(4)) == 2.0, "K4");
    s.check(phi(gen_clique(6)) == 3.0, "K6");
    s.check(std::abs(phi(gen_cycle(6)) - 2.0 / 3.0) < 1e-12, "C6");
    s.check(phi(gen_cycle(8)) == 0.5, "C8");
    s.check(phi(gen_path(4)) == 0.5, "P4");
    s.check(phi(gen_path(2)) == 1.0, "P2");
    for (int it = 0; it < 20; ++it) {
        int n = 4 + rng.below(11);
        WeightedGraph g = random_int_graph(n, 0.2 + 0.5 * rng.uniform01(), 4, rng);
        ExpansionEstimate ex = exact_expansion(g);
        ExpansionEstimate ap = approx_expansion(g, 32, rng.u64());
        std::string tag = std::to_string(it);
        s.check(ex.exact, "exact-flag " + tag);
        s.check(ap.certified_upper >= ex.certified_upper - 1e-12, "upper " + tag);
        s.check(ap.heuristic_lower <= ex.certified_upper + 1e-12, "lower " + tag);
        size_t small = std::min(ap.witness.side_a.size(), ap.witness.side_b.size());
        if (g.n() >= 2)
            s.check(std::abs(ap.certified_upper - ap.witness.weight / small) < 1e-9,
                    "witness " + tag);
    }
    return s.res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"formulations", "oracle",       "sandwich",  "sparsifier",
            "split-weak",   "split-strong", "expansion"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
    if (name == "formulations") return suite_formulations(seed);
    if (name == "oracle") return suite_oracle(seed);
    if (name == "sandwich") return suite_sandwich(seed);
    if (name == "sparsifier") return suite_sparsifier(seed);
    if (name == "split-weak") return suite_split_weak(seed);
    if (name == "split-strong") return suite_split_strong(seed);
    if (name == "expansion") return suite_expansion(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hcs
