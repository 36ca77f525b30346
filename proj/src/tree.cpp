#include "hcs/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace hcs {

const HCTree::Node& HCTree::node(int id) const {
    if (id < 0 || id >= static_cast<int>(nodes_.size()))
        throw std::invalid_argument("tree: node id out of range");
    return nodes_[id];
}

HCTree::Node& HCTree::node(int id) {
    return const_cast<Node&>(static_cast<const HCTree*>(this)->node(id));
}

int HCTree::add_leaf(Vertex v) {
    if (finished_) throw std::logic_error("tree: modified after finish()");
    if (v < 0) throw std::invalid_argument("tree: negative leaf vertex");
    Node nd;
    nd.vertex = v;
    nd.leaf_count = 1;
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
}

int HCTree::add_internal(const std::vector<int>& children) {
    if (finished_) throw std::logic_error("tree: modified after finish()");
    if (children.size() < 2)
        throw shape_error("tree: internal node needs at least 2 children");
    int id = static_cast<int>(nodes_.size());
    Node nd;
    for (int c : children) {
        if (node(c).parent != -1)
            throw std::invalid_argument("tree: child already attached");
        nd.leaf_count += node(c).leaf_count;
    }
    nd.children = children;
    nodes_.push_back(std::move(nd));
    for (int c : children) nodes_[c].parent = id;
    return id;
}

void HCTree::finish() {
    if (finished_) return;
    if (nodes_.empty()) throw std::invalid_argument("tree: empty");
    root_ = -1;
    std::vector<char> seen;
    for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
        if (nodes_[i].parent == -1) {
            if (root_ != -1) throw std::invalid_argument("tree: more than one root");
            root_ = i;
        }
        if (nodes_[i].vertex >= 0) {
            Vertex v = nodes_[i].vertex;
            if (v >= static_cast<int>(seen.size())) seen.resize(v + 1, 0);
            if (seen[v]) throw std::invalid_argument("tree: duplicate leaf " + std::to_string(v));
            seen[v] = 1;
        }
    }
    if (root_ == -1) throw std::invalid_argument("tree: no root (cycle?)");
    int leaves = nodes_[root_].leaf_count;
    if (static_cast<int>(seen.size()) != leaves)
        throw std::invalid_argument("tree: leaves must be exactly 0.." + std::to_string(leaves - 1));
    for (int v = 0; v < leaves; ++v)
        if (!seen[v])
            throw std::invalid_argument("tree: missing leaf " + std::to_string(v));
    int attached = 0;
    for (const auto& nd : nodes_) attached += static_cast<int>(nd.children.size());
    if (attached != static_cast<int>(nodes_.size()) - 1)
        throw std::invalid_argument("tree: detached nodes present");
    finished_ = true;
}

int HCTree::n_leaves() const {
    if (!finished_) throw std::logic_error("tree: finish() not called");
    return nodes_[root_].leaf_count;
}

Vertex HCTree::leaf_vertex(int id) const {
    const Node& nd = node(id);
    if (nd.vertex < 0) throw std::invalid_argument("tree: not a leaf");
    return nd.vertex;
}

int HCTree::leaf_count(int id) const { return node(id).leaf_count; }

bool HCTree::is_binary() const {
    for (const auto& nd : nodes_)
        if (nd.vertex < 0 && nd.children.size() != 2) return false;
    return true;
}

std::vector<Vertex> HCTree::leaves_under(int id) const {
    std::vector<Vertex> out;
    std::vector<int> stack{id};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const Node& nd = node(x);
        if (nd.vertex >= 0)
            out.push_back(nd.vertex);
        else
            for (int c : nd.children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct TreeParser {
    const std::string& s;
    size_t pos = 0;
    HCTree t;

    explicit TreeParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("tree text: " + what + " at position " + std::to_string(pos));
    }

    int parse_node() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            std::vector<int> children;
            children.push_back(parse_node());
            skip_ws();
            while (pos < s.size() && s[pos] == ',') {
                ++pos;
                children.push_back(parse_node());
                skip_ws();
            }
            if (pos >= s.size() || s[pos] != ')') fail("expected ',' or ')'");
            ++pos;
            if (children.size() < 2) fail("internal node needs at least 2 children");
            return t.add_internal(children);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos - start > 9) fail("leaf id too large");
            return t.add_leaf(std::stoi(s.substr(start, pos - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

HCTree parse_tree(const std::string& text) {
    TreeParser p(text);
    p.parse_node();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    p.t.finish();
    return std::move(p.t);
}

std::string format_tree(const HCTree& t) {
    std::string out;
    // iterative to keep deep combs off the call stack
    struct Frame {
        int id;
        size_t next_child = 0;
    };
    std::vector<Frame> stack{{t.root()}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (t.is_leaf(f.id)) {
            out += std::to_string(t.leaf_vertex(f.id));
            stack.pop_back();
            continue;
        }
        const auto& ch = t.children(f.id);
        if (f.next_child == 0) out += '(';
        if (f.next_child == ch.size()) {
            out += ')';
            stack.pop_back();
            continue;
        }
        if (f.next_child > 0) out += ',';
        int c = ch[f.next_child++];
        stack.push_back({c});
    }
    return out;
}

namespace {

void require_leaves_match(const WeightedGraph& g, const HCTree& t, const char* op) {
    if (t.n_leaves() != g.n())
        throw std::invalid_argument(std::string(op) + ": tree has " +
                                    std::to_string(t.n_leaves()) + " leaves but graph has " +
                                    std::to_string(g.n()) + " vertices");
}

// children-before-parent order
std::vector<int> topo_order(const HCTree& t) {
    std::vector<int> order;
    order.reserve(t.node_count());
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        order.push_back(id);
        if (!t.is_leaf(id))
            for (int c : t.children(id)) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace

double cost_lca(const WeightedGraph& g, const HCTree& t) {
    require_leaves_match(g, t, "cost_lca");
    if (g.n() == 0) return 0;

    const int nn = t.node_count();
    std::vector<int> depth(nn, 0), leaf_of(g.n(), -1);
    auto order = topo_order(t);
    // parents precede children when scanning topo order backwards
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int id = *it;
        if (t.parent(id) != -1) depth[id] = depth[t.parent(id)] + 1;
        if (t.is_leaf(id)) leaf_of[t.leaf_vertex(id)] = id;
    }
    int max_depth = *std::max_element(depth.begin(), depth.end());
    int levels = 1;
    while ((1 << levels) <= max_depth + 1) ++levels;
    std::vector<std::vector<int>> up(levels, std::vector<int>(nn, -1));
    for (int id = 0; id < nn; ++id) up[0][id] = t.parent(id);
    for (int k = 1; k < levels; ++k)
        for (int id = 0; id < nn; ++id)
            up[k][id] = up[k - 1][id] == -1 ? -1 : up[k - 1][up[k - 1][id]];

    auto lift = [&](int id, int steps) {
        for (int k = 0; steps; ++k, steps >>= 1)
            if (steps & 1) id = up[k][id];
        return id;
    };
    auto lca = [&](int a, int b) {
        if (depth[a] < depth[b]) std::swap(a, b);
        a = lift(a, depth[a] - depth[b]);
        if (a == b) return a;
        for (int k = levels - 1; k >= 0; --k)
            if (up[k][a] != up[k][b]) {
                a = up[k][a];
                b = up[k][b];
            }
        return up[0][a];
    };

    double total = 0;
    for (const auto& e : g.edges())
        total += e.w * t.leaf_count(lca(leaf_of[e.u], leaf_of[e.v]));
    return total;
}

double cost_cuts(const WeightedGraph& g, const HCTree& t) {
    require_leaves_match(g, t, "cost_cuts");
    if (!t.is_binary()) throw shape_error("cost_cuts: tree must be binary");
    if (g.n() == 0) return 0;

    std::vector<std::vector<Vertex>> leaves(t.node_count());
    double total = 0;
    for (int id : topo_order(t)) {
        if (t.is_leaf(id)) {
            leaves[id] = {t.leaf_vertex(id)};
            continue;
        }
        const auto& ch = t.children(id);
        double w = cut_weight(g, leaves[ch[0]], leaves[ch[1]]);
        total += w * t.leaf_count(id);
        leaves[id] = leaves[ch[0]];
        leaves[id].insert(leaves[id].end(), leaves[ch[1]].begin(), leaves[ch[1]].end());
    }
    return total;
}

HCTree binarize(const HCTree& t) {
    HCTree out;
    std::vector<int> mapped(t.node_count(), -1);
    for (int id : topo_order(t)) {
        if (t.is_leaf(id)) {
            mapped[id] = out.add_leaf(t.leaf_vertex(id));
            continue;
        }
        const auto& ch = t.children(id);
        int cur = mapped[ch[0]];
        for (size_t i = 1; i < ch.size(); ++i)
            cur = out.add_internal({cur, mapped[ch[i]]});
        mapped[id] = cur;
    }
    out.finish();
    return out;
}

bool is_beta_balanced(const HCTree& t, double beta) {
    if (!(beta > 0) || beta > 0.5)
        throw std::invalid_argument("is_beta_balanced: beta must be in (0, 1/2]");
    if (!t.is_binary()) throw shape_error("is_beta_balanced: tree must be binary");
    for (int id = 0; id < t.node_count(); ++id) {
        if (t.is_leaf(id)) continue;
        const auto& ch = t.children(id);
        double total = t.leaf_count(id);
        int mx = std::max(t.leaf_count(ch[0]), t.leaf_count(ch[1]));
        if (mx > (1 - beta) * total + 1e-9) return false;
    }
    return true;
}

double w_functional(const WeightedGraph& g, const HCTree& t) {
    require_leaves_match(g, t, "w_functional");
    if (!t.is_binary()) throw shape_error("w_functional: tree must be binary");
    if (g.n() == 0) return 0;

    // bottom-up: degree sums and internal weights per cluster give global cut
    // weights without touching the LCA machinery
    std::vector<double> degsum(t.node_count(), 0), inside(t.node_count(), 0);
    std::vector<std::vector<Vertex>> leaves(t.node_count());
    double total = 0;
    for (int id : topo_order(t)) {
        if (t.is_leaf(id)) {
            Vertex v = t.leaf_vertex(id);
            degsum[id] = g.weighted_degree(v);
            leaves[id] = {v};
            continue;
        }
        const auto& ch = t.children(id);
        double across = cut_weight(g, leaves[ch[0]], leaves[ch[1]]);
        degsum[id] = degsum[ch[0]] + degsum[ch[1]];
        inside[id] = inside[ch[0]] + inside[ch[1]] + across;
        double cut_a = degsum[ch[0]] - 2 * inside[ch[0]];
        double cut_b = degsum[ch[1]] - 2 * inside[ch[1]];
        total += 0.5 * (cut_a + cut_b) * t.leaf_count(id);
        leaves[id] = leaves[ch[0]];
        leaves[id].insert(leaves[id].end(), leaves[ch[1]].begin(), leaves[ch[1]].end());
    }
    return total;
}

std::vector<TreeCut> tree_cuts(const HCTree& t) {
    if (!t.is_binary()) throw shape_error("tree_cuts: tree must be binary");
    std::vector<TreeCut> out;
    for (int id = 0; id < t.node_count(); ++id) {
        if (t.is_leaf(id)) continue;
        const auto& ch = t.children(id);
        TreeCut tc;
        tc.small_side = t.leaves_under(ch[0]);
        tc.large_side = t.leaves_under(ch[1]);
        tc.node = id;
        bool swap = tc.small_side.size() != tc.large_side.size()
                        ? tc.small_side.size() > tc.large_side.size()
                        : tc.small_side.front() > tc.large_side.front();
        if (swap) std::swap(tc.small_side, tc.large_side);
        out.push_back(std::move(tc));
    }
    return out;
}

namespace {

int build_split(HCTree& t, std::vector<Vertex>& ids, int lo, int hi,
                const std::function<int(int)>& split_of) {
    int size = hi - lo;
    if (size == 1) return t.add_leaf(ids[lo]);
    int a = split_of(size);
    int left = build_split(t, ids, lo, lo + a, split_of);
    int right = build_split(t, ids, lo + a, hi, split_of);
    return t.add_internal({left, right});
}

}  // namespace

HCTree random_binary_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_binary_tree: n must be >= 1");
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    HCTree t;
    build_split(t, ids, 0, n, [&](int size) { return 1 + rng.below(size - 1); });
    t.finish();
    return t;
}

HCTree random_balanced_tree(int n, double beta, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_balanced_tree: n must be >= 1");
    if (!(beta > 0) || beta > 0.5)
        throw std::invalid_argument("random_balanced_tree: beta must be in (0, 1/2]");
    std::vector<Vertex> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    HCTree t;
    build_split(t, ids, 0, n, [&](int size) {
        int amax = static_cast<int>(std::floor((1 - beta) * size + 1e-9));
        amax = std::min(amax, size - 1);
        int amin = std::max(1, size - amax);
        if (amin > amax) return size / 2;  // infeasible balance: most-balanced split
        return amin + rng.below(amax - amin + 1);
    });
    t.finish();
    return t;
}

int add_balanced_subtree(HCTree& t, const std::vector<Vertex>& leaves) {
    if (leaves.empty()) throw std::invalid_argument("add_balanced_subtree: no leaves");
    std::vector<Vertex> ids = leaves;
    return build_split(t, ids, 0, static_cast<int>(ids.size()),
                       [](int size) { return size / 2; });
}

HCTree balanced_tree_over(const std::vector<Vertex>& leaves) {
    HCTree t;
    add_balanced_subtree(t, leaves);
    t.finish();
    return t;
}

}  // namespace hcs
