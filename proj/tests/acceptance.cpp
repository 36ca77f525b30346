// Acceptance harness: one PASS/FAIL line per criterion, deterministic seeds,
// tolerances pinned below. Exit code counts criteria that failed without being
// documented as expected-red (criterion 12's separation threshold).
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "hcs/exact.hpp"
#include "hcs/graph.hpp"
#include "hcs/instances.hpp"
#include "hcs/rng.hpp"
#include "hcs/solver.hpp"
#include "hcs/sparsify.hpp"
#include "hcs/stream.hpp"
#include "hcs/tree.hpp"

using namespace hcs;

namespace {

constexpr double kRelTol = 1e-9;    // oracle/value comparisons
constexpr double kBeta = 1.0 / 3.0; // balance parameter used throughout
constexpr double kEps = 0.2;        // sparsifier accuracy in criteria 6/7/14
constexpr double kFactor = 9.0;     // approximation envelope, criterion 8
constexpr double kSepNeed = 1.5;    // criterion 12 separation threshold
constexpr double kMonoSlack = 0.1;  // criterion 12 monotonicity slack

int g_unexpected = 0;
int g_passed = 0;
std::vector<int> g_expected_red;

void report(int id, bool pass, const std::string& detail, bool expected_fail = false) {
    const char* verdict = pass ? "PASS" : "FAIL";
    std::string suffix;
    if (!pass && expected_fail) {
        suffix = "  [expected]";
        g_expected_red.push_back(id);
    }
    std::printf("[%2d] %s  %s%s\n", id, verdict, detail.c_str(), suffix.c_str());
    std::fflush(stdout);
    if (pass)
        ++g_passed;
    else if (!expected_fail)
        ++g_unexpected;
}

bool close(double a, double b) { return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)}); }

WeightedGraph random_graph(int n, double p, int wmax, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.push_back({u, v, 1.0 + rng.below(wmax)});
    return WeightedGraph(n, std::move(edges));
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---- criterion 1: the two cost formulations agree on binary trees ----
void crit1() {
    Rng rng(101);
    int bad = 0;
    const int trials = 200;
    for (int it = 0; it < trials; ++it) {
        int n = 2 + rng.below(11);
        WeightedGraph g = random_graph(n, 0.5, 5, rng);
        HCTree t = random_binary_tree(n, rng);
        if (cost_lca(g, t) != cost_cuts(g, t)) ++bad;  // integer sums: exact equality
    }
    report(1, bad == 0, fmt("lca/cuts formulations agree exactly on %d random pairs (n<=12)", trials));
}

// ---- criterion 2: subset-DP optimum matches explicit tree enumeration ----
void crit2() {
    Rng rng(202);
    int bad = 0;
    const int trials = 50;
    for (int it = 0; it < trials; ++it) {
        int n = 2 + rng.below(6);
        WeightedGraph g = random_graph(n, 0.55, 3, rng);
        if (!close(brute_force_opt(g).value, exhaustive_opt(g))) ++bad;
    }
    report(2, bad == 0, fmt("dp optimum == exhaustive enumeration on %d graphs (n<=7, tol %.0e)",
                            trials, kRelTol));
}

// ---- criterion 3: unit cliques cost (s^3-s)/3 under any tree ----
void crit3() {
    bool ok = true;
    for (int s = 2; s <= 8; ++s) {
        WeightedGraph g = gen_clique(s);
        double want = (static_cast<double>(s) * s * s - s) / 3.0;
        if (brute_force_opt(g).value != want) ok = false;
        // a comb and a halved tree must also land exactly on the closed form
        HCTree comb;
        int acc = comb.add_leaf(0);
        for (int v = 1; v < s; ++v) acc = comb.add_internal({acc, comb.add_leaf(v)});
        comb.finish();
        std::vector<Vertex> ids(s);
        for (int v = 0; v < s; ++v) ids[v] = v;
        if (cost_lca(g, comb) != want || cost_lca(g, balanced_tree_over(ids)) != want) ok = false;
    }
    report(3, ok, "clique cost equals (s^3-s)/3 for s=2..8, optimum and explicit trees alike");
}

// ---- criterion 4: optimum adds over components and is weight-monotone ----
void crit4() {
    Rng rng(404);
    int bad = 0;
    for (int it = 0; it < 50; ++it) {
        WeightedGraph g1 = random_graph(2 + rng.below(7), 0.5, 4, rng);
        WeightedGraph g2 = random_graph(2 + rng.below(7), 0.5, 4, rng);
        double sum = brute_force_opt(g1).value + brute_force_opt(g2).value;
        if (!close(brute_force_opt(disjoint_union({g1, g2})).value, sum)) ++bad;
    }
    for (int it = 0; it < 50; ++it) {
        int n = 3 + rng.below(6);
        WeightedGraph g = random_graph(n, 0.5, 4, rng);
        std::vector<Edge> plus = g.edges();
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v) v = (v + 1) % n;
        plus.push_back({std::min(u, v), std::max(u, v), 1.0 + rng.below(3)});
        WeightedGraph g2(n, std::move(plus));  // merges parallels: weight bump or new edge
        if (brute_force_opt(g2).value < brute_force_opt(g).value - kRelTol) ++bad;
    }
    report(4, bad == 0, "optimum is additive over disjoint unions and monotone under heavier edges (100 checks)");
}

// ---- criterion 5: C <= W <= C/beta for 1/3-balanced trees ----
void crit5() {
    Rng rng(505);
    int bad = 0;
    const int trials = 100;
    for (int it = 0; it < trials; ++it) {
        int n = 3 + rng.below(10);
        WeightedGraph g = random_graph(n, 0.5, 5, rng);
        HCTree t = random_balanced_tree(n, kBeta, rng);
        double c = cost_lca(g, t);
        double w = w_functional(g, t);
        if (c > w + kRelTol || w > 3.0 * c + kRelTol) ++bad;
    }
    report(5, bad == 0, fmt("C <= W <= 3C held for %d balanced trees at beta=1/3", trials));
}

// ---- criterion 6: sparsified cost sandwich on balanced trees ----
void crit6() {
    int bad = 0;
    const int trials = 50;
    const double lo = (1.0 - kEps) * kBeta;  // 0.2667
    const double hi = (1.0 + kEps) / kBeta;  // 3.6
    for (int it = 0; it < trials; ++it) {
        Rng rng(6000 + it);
        WeightedGraph g = gen_er(16, 0.7, 6000 + it);
        SparsifyParams sp;
        sp.rho_override = 6.0;  // forces real sampling on a graph this small
        sp.seed = 77 * it + 1;
        WeightedGraph h = offline_sparsify(g, sp);
        HCTree t = random_balanced_tree(16, kBeta, rng);
        double cg = cost_lca(g, t);
        double ch = cost_lca(h, t);
        if (cg <= 0) continue;
        if (ch < lo * cg - kRelTol || ch > hi * cg + kRelTol) ++bad;
    }
    report(6, bad <= 1,
           fmt("sparsified cost within [(1-eps)b, (1+eps)/b]*C on %d/%d sampled triples (<=1 miss allowed)",
               trials - bad, trials));
}

// every proper cut of two graphs on n<=16 vertices, compared within eps
bool cuts_within(const WeightedGraph& a, const WeightedGraph& b, double eps) {
    const int n = a.n();
    const size_t full = size_t{1} << n;
    auto table = [&](const WeightedGraph& g) {
        std::vector<double> cut(full, 0.0);
        std::vector<double> deg(n, 0.0);
        for (int v = 0; v < n; ++v) deg[v] = g.weighted_degree(v);
        for (size_t mask = 1; mask < full; ++mask) {
            int low = std::countr_zero(mask);
            size_t rest = mask & (mask - 1);
            double cross = 0;
            for (const auto& [u, w] : g.neighbors(low))
                if (rest >> u & 1) cross += w;
            cut[mask] = cut[rest] + deg[low] - 2 * cross;
        }
        return cut;
    };
    auto ca = table(a), cb = table(b);
    for (size_t mask = 1; mask + 1 < full; ++mask)
        if (std::abs(ca[mask] - cb[mask]) > eps * ca[mask] + kRelTol) return false;
    return true;
}

// ---- criterion 7: one pass within budget, all 2^15-1 cuts preserved ----
void crit7() {
    int bad = 0;
    const int trials = 50;
    size_t cap = target_edges(16, kEps, 6.0);
    for (int it = 0; it < trials; ++it) {
        WeightedGraph g = gen_er(16, 0.5, 7000 + it);
        EdgeStream s = EdgeStream::from_graph(g);
        StreamStats st;
        WeightedGraph h = stream_sparsify(s, SparsifyParams{}, &st);
        bool ok = st.passes == 1 && st.words_peak <= 3 * cap && cuts_within(g, h, kEps);
        if (!ok) ++bad;
    }
    report(7, bad == 0,
           fmt("single pass, words within 3*budget, every one of the 32767 cuts within eps (%d seeds)", trials));
}

// ---- criterion 8: recursive balanced cuts within 9x of the optimum ----
void crit8() {
    Rng rng(808);
    int bad = 0;
    const int trials = 100;
    CutFinder exact;
    exact.kind = FinderKind::exact;
    double worst = 0;
    for (int it = 0; it < trials; ++it) {
        int n = 4 + rng.below(9);
        WeightedGraph g = random_graph(n, 0.45, 4, rng);
        double opt = brute_force_opt(g).value;
        double cost = cost_lca(g, recursive_balanced_hc(g, kBeta, exact));
        if (opt == 0) {
            if (cost != 0) ++bad;
            continue;
        }
        worst = std::max(worst, cost / opt);
        if (cost > kFactor * opt * (1 + kRelTol)) ++bad;
    }
    report(8, bad == 0, fmt("recursive exact-cut solver within 9x of optimum on %d graphs (worst %.3f)",
                            trials, worst));
}

// ---- criterion 9: the balanced-cut lower bound never exceeds the optimum ----
void crit9() {
    Rng rng(909);
    int bad = 0;
    CutFinder exact;
    exact.kind = FinderKind::exact;
    for (int it = 0; it < 50; ++it) {
        int n = 3 + rng.below(12);
        WeightedGraph g = random_graph(n, 0.5, 4, rng);
        if (lower_bound_balanced(g, exact).value > brute_force_opt(g).value + kRelTol) ++bad;
    }
    for (int s = 3; s <= 14; ++s) {
        WeightedGraph g = gen_clique(s);
        int amax = std::min(s - 1, static_cast<int>(std::floor(2.0 * s / 3.0 + 1e-9)));
        int amin = s - amax;
        double want = s / 3.0 * (static_cast<double>(amin) * amax);
        auto lb = lower_bound_balanced(g, exact);
        if (!close(lb.value, want) || !lb.certified ||
            lb.value > brute_force_opt(g).value + kRelTol)
            ++bad;
    }
    report(9, bad == 0, "lower bound <= optimum on 50 random graphs and exact on cliques s=3..14");
}

// ---- criterion 10: two-clique instances split clique-vs-clique first ----
void crit10() {
    Rng rng(1010);
    int bad = 0;
    const int trials = 30;
    for (int it = 0; it < trials; ++it) {
        int s = 4 + rng.below(4);  // n = 2s <= 14 keeps the oracle exact
        int cross = static_cast<int>(rng.below(s * s / 2 + 1));
        auto inst = gen_two_clique(s, cross, 500 + it);
        std::vector<Vertex> left, right;
        for (int v = 0; v < s; ++v) left.push_back(v);
        for (int v = s; v < 2 * s; ++v) right.push_back(v);
        if (!verify_first_split(inst.graph, left, right)) ++bad;
    }
    report(10, bad == 0,
           fmt("clique-vs-clique is an optimal first split on %d instances (cross <= s^2/2)", trials));
}

namespace detail {
int add_random_subtree(HCTree& t, std::vector<Vertex> leaves, Rng& rng) {
    if (leaves.size() == 1) return t.add_leaf(leaves[0]);
    rng.shuffle(leaves);
    size_t a = 1 + rng.below(leaves.size() - 1);
    std::vector<Vertex> left(leaves.begin(), leaves.begin() + a);
    std::vector<Vertex> right(leaves.begin() + a, leaves.end());
    return t.add_internal({add_random_subtree(t, std::move(left), rng),
                           add_random_subtree(t, std::move(right), rng)});
}
}  // namespace detail

// ---- criterion 11: index gadget closed form + strict prescribed optimality ----
void crit11() {
    Rng rng(1111);
    int form_bad = 0;
    long beaten = 0, alternatives = 0;
    for (int N : {2, 3, 4}) {
        for (int seed = 1; seed <= 5; ++seed) {
            BitMatrix x = BitMatrix::random(N, 1100 + 10 * N + seed);
            int i = static_cast<int>(rng.below(N));
            int j = static_cast<int>(rng.below(N));
            IndexGadget gad = gen_index_gadget(N, x, i, j);
            double base = cost_lca(gad.graph, gad.prescribed);
            double want = gad.edge_present ? gad.cost_edge_present : gad.cost_edge_absent;
            if (base != want) ++form_bad;  // integer-valued: exact match required

            const int n = 16 * N;
            std::vector<Vertex> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            for (int a = 0; a < 667; ++a) {
                HCTree alt;
                if (a % 2 == 0) {
                    alt = random_balanced_tree(n, kBeta, rng);
                } else {
                    std::vector<Vertex> side;
                    switch ((a / 2) % 4) {
                        case 0: side = gad.sets[1]; break;
                        case 1: side = gad.sets[2]; break;
                        case 2: side = gad.sets[3]; break;
                        default: {
                            std::vector<Vertex> pool = all;
                            rng.shuffle(pool);
                            side.assign(pool.begin(), pool.begin() + 4 * N);
                            break;
                        }
                    }
                    std::vector<char> in_side(n, 0);
                    for (Vertex v : side) in_side[v] = 1;
                    std::vector<Vertex> rest;
                    for (Vertex v : all)
                        if (!in_side[v]) rest.push_back(v);
                    alt.add_internal({detail::add_random_subtree(alt, side, rng),
                                      detail::add_random_subtree(alt, rest, rng)});
                    alt.finish();
                }
                ++alternatives;
                if (cost_lca(gad.graph, alt) > base) ++beaten;
            }
        }
    }
    bool ok = form_bad == 0 && beaten == alternatives;
    report(11, ok,
           fmt("gadget tree hits its closed form exactly and strictly beats %ld/%ld alternative trees",
               beaten, alternatives));
}

// ---- criterion 12: noisy-cycle streaming separation (expected red) ----
void crit12() {
    // the instance family is deterministic, so the seed must drive the pipeline
    // randomness itself: arrival shuffle plus the spectral finder's start vector
    auto ratios = [&](int n, double& mean_out, double& min_out) {
        double acc = 0;
        min_out = 1e300;
        for (int seed = 1; seed <= 5; ++seed) {
            CutFinder spectral;  // defaults: spectral_refine
            spectral.params.seed = static_cast<uint64_t>(seed);
            double cost[3] = {0, 0, 0};
            for (int cs : {1, 2}) {
                NocInstance inst = gen_noc(n, 16, cs);
                EdgeStream s = EdgeStream::from_graph(inst.graph, StreamOrder::shuffled,
                                                      static_cast<uint64_t>(seed));
                StreamSolveResult r = stream_hc(s, SparsifyParams{}, kBeta, spectral);
                cost[cs] = r.report.cost;
            }
            double ratio = cost[1] / cost[2];
            acc += ratio;
            min_out = std::min(min_out, ratio);
        }
        mean_out = acc / 5.0;
    };
    double r4 = 0, r8 = 0, min4 = 0, min8 = 0;
    ratios(4096, r4, min4);
    ratios(8192, r8, min8);
    bool threshold = min4 >= kSepNeed;  // the >= 1.5 bar applies at n = 4096, every seed
    bool mono = r8 >= r4 - kMonoSlack;
    report(12, threshold && mono,
           fmt("noc separation @4096 mean=%.4f min=%.4f (every seed >= %.1f: %s), @8192 mean=%.4f, monotone %s",
               r4, min4, kSepNeed, threshold ? "yes" : "NO", r8, mono ? "yes" : "NO"),
           /*expected_fail=*/mono);  // the threshold miss is the documented red; losing
                                     // monotonicity too would be an unexpected regression
}

// ---- criterion 13: expander-count separation by streamed cost ----
void crit13() {
    CutFinder spectral;
    const int n = 4096, t = 8, k = 128;
    int comp_bad = 0, below1 = 0, strong = 0;
    const int seeds = 5;
    for (int seed = 1; seed <= seeds; ++seed) {
        OvmeInstance yes = gen_ovme(n, k, t, true, static_cast<uint64_t>(seed));
        OvmeInstance no = gen_ovme(n, k, t, false, static_cast<uint64_t>(seed));
        if (yes.graph.components().size() != 1) ++comp_bad;
        if (no.graph.components().size() != static_cast<size_t>(t)) ++comp_bad;
        double costs[2];
        int slot = 0;
        for (const OvmeInstance* inst : {&yes, &no}) {
            EdgeStream s = EdgeStream::from_graph(inst->graph, StreamOrder::shuffled,
                                                  static_cast<uint64_t>(seed));
            costs[slot++] = stream_hc(s, SparsifyParams{}, kBeta, spectral).report.cost;
        }
        double ratio = costs[0] / costs[1];
        if (ratio < 1.0) ++below1;
        if (ratio >= 2.0) ++strong;
    }
    bool ok = comp_bad == 0 && below1 == 0 && strong >= 4;
    report(13, ok,
           fmt("one-vs-%d expanders: components exact, cost ratio >= 2 on %d/%d seeds (all >= 1)",
               t, strong, seeds));
}

// ---- criterion 14: streamed space stays within 3*target and below the input ----
void crit14() {
    const int n = 1024;
    // smallest round budget whose per-level threshold clears the n-edge
    // spanning-forest floor: cap = 23040 edges, fixpoint T = 1152 >= n
    const double budget_c = 0.0009;
    WeightedGraph g = gen_er(n, 0.1909, 1414);
    size_t cap = target_edges(n, kEps, budget_c);
    bool ok = true;
    size_t peak_seen = 0;
    for (auto order : {StreamOrder::natural, StreamOrder::shuffled,
                       StreamOrder::adversarial_cut_last}) {
        EdgeStream s = EdgeStream::from_graph(g, order, 2);
        SparsifyParams sp;
        sp.budget_c = budget_c;
        sp.seed = 3;
        StreamStats st;
        WeightedGraph h = stream_sparsify(s, sp, &st);
        peak_seen = std::max(peak_seen, st.words_peak);
        if (st.passes != 1 || st.words_peak > 3 * cap ||
            st.words_peak > static_cast<size_t>(g.m()) ||  // strict saving: words < edge count
            static_cast<size_t>(h.m()) > cap)
            ok = false;
    }
    report(14, ok,
           fmt("one pass on %d edges: peak %zu words <= %zu (3*budget) and <= m",
               g.m(), peak_seen, 3 * cap));
}

}  // namespace

int main() {
    std::printf("acceptance checks (beta=1/3, eps=%.1f, tolerance %.0e)\n", kEps, kRelTol);
    crit1();
    crit2();
    crit3();
    crit4();
    crit5();
    crit6();
    crit7();
    crit8();
    crit9();
    crit10();
    crit11();
    crit12();
    crit13();
    crit14();
    std::printf("----\n%d/14 criteria green", g_passed);
    if (!g_expected_red.empty()) {
        std::printf("; documented expected-red:");
        for (int id : g_expected_red) std::printf(" %d", id);
    }
    if (g_unexpected) std::printf("; UNEXPECTED failures: %d", g_unexpected);
    std::printf("\n");
    return g_unexpected;
}
