#include "hcs/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hcs/rng.hpp"

namespace hcs {

namespace {

void append_clique(std::vector<Edge>& out, const std::vector<Vertex>& verts, Weight w) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            out.push_back({verts[i], verts[j], w});
}

}  // namespace

WeightedGraph gen_path(int vertices, Weight w) {
    if (vertices < 1) throw std::invalid_argument("gen_path: need at least 1 vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1, w});
    return WeightedGraph(vertices, std::move(edges));
}

WeightedGraph gen_path_edges(int edges, Weight w) {
    if (edges < 0) throw std::invalid_argument("gen_path_edges: negative edge count");
    return gen_path(edges + 1, w);
}

WeightedGraph gen_cycle(int vertices, Weight w) {
    if (vertices < 3) throw std::invalid_argument("gen_cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1, w});
    edges.push_back({0, vertices - 1, w});
    return WeightedGraph(vertices, std::move(edges));
}

WeightedGraph gen_clique(int vertices, Weight w) {
    if (vertices < 1) throw std::invalid_argument("gen_clique: need at least 1 vertex");
    std::vector<Edge> edges;
    std::vector<Vertex> verts(vertices);
    std::iota(verts.begin(), verts.end(), 0);
    append_clique(edges, verts, w);
    return WeightedGraph(vertices, std::move(edges));
}

WeightedGraph gen_er(int vertices, double p, uint64_t seed, Weight w) {
    if (vertices < 1) throw std::invalid_argument("gen_er: need at least 1 vertex");
    if (!(p >= 0) || p > 1) throw std::invalid_argument("gen_er: p must be in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < vertices; ++u)
        for (Vertex v = u + 1; v < vertices; ++v)
            if (rng.uniform01() < p) edges.push_back({u, v, w});
    return WeightedGraph(vertices, std::move(edges));
}

WeightedGraph disjoint_union(const std::vector<WeightedGraph>& parts) {
    int n = 0;
    std::vector<Edge> edges;
    for (const auto& g : parts) {
        for (const auto& e : g.edges()) edges.push_back({e.u + n, e.v + n, e.w});
        n += g.n();
    }
    if (n < 1) throw std::invalid_argument("disjoint_union: empty union");
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph relabel(const WeightedGraph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<char> seen(g.n(), 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= g.n() || seen[p])
            throw std::invalid_argument("relabel: not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
    return WeightedGraph(g.n(), std::move(edges));
}

WeightedGraph permuted(const WeightedGraph& g, uint64_t seed) {
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    return relabel(g, perm);
}

NocInstance gen_noc(int n, int k, int case_id) {
    if (case_id != 1 && case_id != 2) throw std::invalid_argument("gen_noc: case must be 1 or 2");
    if (k < 2) throw std::invalid_argument("gen_noc: k must be at least 2");
    int block = 8 * k;
    int n_eff = (n / block) * block;
    if (n_eff < block) throw std::invalid_argument("gen_noc: n too small (needs n >= 8k)");
    if (static_cast<long>(k) * k >= n_eff)
        throw std::invalid_argument("gen_noc: requires k < sqrt(n)");
    if (n_eff / 8 < 3)
        throw std::invalid_argument("gen_noc: n/8 must be at least 3 for the long cycles");

    NocInstance inst;
    inst.n = n_eff;
    inst.k = k;
    inst.case_id = case_id;
    inst.path_len = k;
    inst.paths = 3 * n_eff / (4 * k);
    if (case_id == 1) {
        inst.cycles = 2;
        inst.cycle_len = n_eff / 8;
    } else {
        inst.cycles = n_eff / (8 * k);
        inst.cycle_len = 2 * k;
    }

    std::vector<WeightedGraph> parts;
    parts.reserve(inst.cycles + inst.paths);
    for (int c = 0; c < inst.cycles; ++c) parts.push_back(gen_cycle(inst.cycle_len));
    for (int p = 0; p < inst.paths; ++p) parts.push_back(gen_path(inst.path_len));
    inst.graph = disjoint_union(parts);
    return inst;
}

OvmeInstance gen_ovme(int n, int k, int t, bool yes_case, uint64_t seed) {
    if (t < 1) throw std::invalid_argument("gen_ovme: t must be at least 1");
    if (k < 1) throw std::invalid_argument("gen_ovme: k must be at least 1");
    if (n < 4 || n % (4 * t) != 0)
        throw std::invalid_argument("gen_ovme: n must be a positive multiple of 4t");

    OvmeInstance inst;
    inst.n = n;
    inst.k = k;
    inst.t = t;
    inst.yes_case = yes_case;

    Rng rng(seed);
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    inst.hidden_class.assign(n, 0);
    std::vector<std::vector<Vertex>> classes(t);
    for (int v = 0; v < n; ++v) {
        int cls = v / (n / t);
        inst.hidden_class[ids[v]] = cls;
        classes[cls].push_back(ids[v]);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(k) * (n / 4));
    inst.matchings.resize(k);
    std::vector<Vertex> pool(n);
    for (int player = 0; player < k; ++player) {
        auto& matching = inst.matchings[player];
        if (yes_case) {
            std::iota(pool.begin(), pool.end(), 0);
            rng.shuffle(pool);
            for (int e = 0; e < n / 4; ++e)
                matching.emplace_back(pool[2 * e], pool[2 * e + 1]);
        } else {
            int quota = n / (4 * t);
            for (auto& cls : classes) {
                rng.shuffle(cls);
                for (int e = 0; e < quota; ++e)
                    matching.emplace_back(cls[2 * e], cls[2 * e + 1]);
            }
        }
        for (auto [a, b] : matching) edges.push_back({a, b, 1});
    }
    inst.graph = WeightedGraph(n, std::move(edges));
    return inst;
}

TwoCliqueInstance gen_two_clique(int s, int cross_edges, uint64_t seed) {
    if (s < 1) throw std::invalid_argument("gen_two_clique: s must be at least 1");
    if (cross_edges < 0 || cross_edges > s * s / 2.0)
        throw std::invalid_argument("gen_two_clique: cross edge count must be <= s^2/2");

    TwoCliqueInstance inst;
    inst.s = s;
    std::vector<Edge> edges;
    std::vector<Vertex> left(s), right(s);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), s);
    append_clique(edges, left, 1);
    append_clique(edges, right, 1);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<size_t>(s) * s);
    for (Vertex a = 0; a < s; ++a)
        for (Vertex b = 0; b < s; ++b) pairs.emplace_back(a, s + b);
    Rng rng(seed);
    for (int e = 0; e < cross_edges; ++e) {  // partial shuffle: first e slots are the sample
        int pick = e + rng.below(static_cast<int>(pairs.size()) - e);
        std::swap(pairs[e], pairs[pick]);
        inst.cross.push_back(pairs[e]);
        edges.push_back({pairs[e].first, pairs[e].second, 1});
    }
    inst.graph = WeightedGraph(2 * s, std::move(edges));
    return inst;
}

BitMatrix BitMatrix::zeros(int n) {
    if (n < 1) throw std::invalid_argument("BitMatrix: n must be positive");
    BitMatrix m;
    m.n = n;
    m.bits.assign(n, std::vector<uint8_t>(n, 0));
    return m;
}

BitMatrix BitMatrix::random(int n, uint64_t seed) {
    BitMatrix m = zeros(n);
    Rng rng(seed);
    for (auto& row : m.bits)
        for (auto& b : row) b = static_cast<uint8_t>(rng.u64() & 1);
    return m;
}

long BitMatrix::ones() const {
    long total = 0;
    for (const auto& row : bits)
        for (uint8_t b : row) total += b;
    return total;
}

long BitMatrix::row_sum(int i) const {
    long total = 0;
    for (uint8_t b : bits.at(i)) total += b;
    return total;
}

long BitMatrix::col_sum(int j) const {
    if (j < 0 || j >= n) throw std::out_of_range("BitMatrix: column out of range");
    long total = 0;
    for (const auto& row : bits) total += row[j];
    return total;
}

IndexGadget gen_index_gadget(int N, const BitMatrix& x, int i, int j) {
    if (N < 1) throw std::invalid_argument("gen_index_gadget: N must be positive");
    if (x.n != N) throw std::invalid_argument("gen_index_gadget: matrix dimension mismatch");
    if (i < 0 || i >= N || j < 0 || j >= N)
        throw std::invalid_argument("gen_index_gadget: probe (i,j) out of range");

    IndexGadget gad;
    gad.N = N;
    const long r = x.row_sum(i), c = x.col_sum(j);
    const int b = x.bits[i][j];
    gad.edge_present = b != 0;
    gad.swapped = r > c;  // S1 surrounds the endpoint of smaller degree

    const Vertex left_end = i, right_end = N + j;
    gad.endpoint_1 = gad.swapped ? right_end : left_end;
    gad.endpoint_2 = gad.swapped ? left_end : right_end;

    // remainders of the probed endpoints' own sides go to S3 (S1's side) and S4
    std::vector<Vertex> rest1, rest2;
    for (Vertex v = 0; v < N; ++v)
        if (v != left_end) (gad.swapped ? rest2 : rest1).push_back(v);
    for (Vertex v = N; v < 2 * N; ++v)
        if (v != right_end) (gad.swapped ? rest1 : rest2).push_back(v);

    Vertex next = 2 * N;
    auto extras = [&next](int count) {
        std::vector<Vertex> ids(count);
        std::iota(ids.begin(), ids.end(), next);
        next += count;
        return ids;
    };
    gad.sets[0] = extras(4 * N - 1);
    gad.sets[0].push_back(gad.endpoint_1);
    gad.sets[1] = extras(4 * N - 1);
    gad.sets[1].push_back(gad.endpoint_2);
    gad.sets[2] = extras(3 * N + 1);
    gad.sets[2].insert(gad.sets[2].end(), rest1.begin(), rest1.end());
    gad.sets[3] = extras(3 * N + 1);
    gad.sets[3].insert(gad.sets[3].end(), rest2.begin(), rest2.end());
    for (auto& s : gad.sets) std::sort(s.begin(), s.end());

    std::vector<Edge> edges;
    for (const auto& s : gad.sets) append_clique(edges, s, 1);
    for (int a = 0; a < N; ++a)
        for (int bcol = 0; bcol < N; ++bcol)
            if (x.bits[a][bcol]) edges.push_back({a, N + bcol, 1});
    gad.graph = WeightedGraph(16 * N, std::move(edges));

    int n1 = add_balanced_subtree(gad.prescribed, gad.sets[0]);
    int n2 = add_balanced_subtree(gad.prescribed, gad.sets[1]);
    int n3 = add_balanced_subtree(gad.prescribed, gad.sets[2]);
    int n4 = add_balanced_subtree(gad.prescribed, gad.sets[3]);
    int n34 = gad.prescribed.add_internal({n3, n4});
    int n234 = gad.prescribed.add_internal({n2, n34});
    gad.prescribed.add_internal({n1, n234});
    gad.prescribed.finish();

    // cross-edge charges in the prescribed tree: S1's outward edges meet the
    // rest at the root (16N leaves), S2's remaining ones at 12N, S3-S4 at 8N;
    // the 4 internal cliques cost (s^3-s)/3 each regardless of subtree shape
    const long s4 = 4L * N;
    const double clique_term = 4.0 * (s4 * s4 * s4 - s4) / 3.0;
    const double d1 = gad.swapped ? c : r;
    const double d2 = gad.swapped ? r : c;
    const double e34 = static_cast<double>(x.ones() - r - c + b);
    gad.cost_edge_present =
        (d1 + 1 - b) * 16.0 * N + (d2 - b) * 12.0 * N + e34 * 8.0 * N + clique_term;
    gad.cost_edge_absent =
        (d1 - b) * 16.0 * N + (d2 - b) * 12.0 * N + e34 * 8.0 * N + clique_term;
    return gad;
}

bool four_clique_conditions(const WeightedGraph& g,
                            const std::array<std::vector<Vertex>, 4>& parts) {
    const size_t s = parts[0].size();
    std::vector<int> part_of(g.n(), -1);
    size_t covered = 0;
    for (int p = 0; p < 4; ++p) {
        if (parts[p].size() != s)
            throw std::invalid_argument("four_clique_conditions: parts must have equal sizes");
        for (Vertex v : parts[p]) {
            if (v < 0 || v >= g.n() || part_of[v] != -1)
                throw std::invalid_argument("four_clique_conditions: not a partition");
            part_of[v] = p;
            ++covered;
        }
    }
    if (covered != static_cast<size_t>(g.n()))
        throw std::invalid_argument("four_clique_conditions: partition must cover all vertices");

    long cross[4][4] = {};
    std::vector<char> outward(g.n(), 0);
    for (const auto& e : g.edges()) {
        int pu = part_of[e.u], pv = part_of[e.v];
        if (pu == pv) continue;
        ++cross[std::min(pu, pv)][std::max(pu, pv)];
        outward[e.u] = outward[e.v] = 1;
    }
    auto outward_count = [&](int p) {
        long k = 0;
        for (Vertex v : parts[p]) k += outward[v];
        return k;
    };

    const double sd = static_cast<double>(s);
    bool cond_a = cross[0][1] <= 1 && cross[0][3] >= 1 && cross[0][3] <= cross[1][2] &&
                  cross[1][2] <= 3 * sd / 8;
    bool cond_b = outward_count(0) == 1 && outward_count(1) == 1;
    bool cond_c = sd * sd / 64 <= cross[2][3] && cross[2][3] <= 3 * sd * sd / 64;
    return cond_a && cond_b && cond_c;
}

}  // namespace hcs
