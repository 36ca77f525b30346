#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hcs/graph.hpp"
#include "hcs/rng.hpp"

namespace hcs {

// Thrown when an operation requires a binary tree (or a well-formed node arity)
// and the given tree does not qualify.
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rooted cluster tree over leaves 0..L-1. Internal nodes have >= 2 children.
// Built incrementally (add_leaf / add_internal), then sealed with finish(),
// which finds the unique root and validates the leaf set.
class HCTree {
  public:
    int add_leaf(Vertex v);
    int add_internal(const std::vector<int>& children);
    void finish();

    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int n_leaves() const;
    bool is_leaf(int id) const { return node(id).vertex >= 0; }
    Vertex leaf_vertex(int id) const;
    const std::vector<int>& children(int id) const { return node(id).children; }
    int parent(int id) const { return node(id).parent; }
    int leaf_count(int id) const;
    bool is_binary() const;
    // leaves under `id`, ascending
    std::vector<Vertex> leaves_under(int id) const;

  private:
    struct Node {
        int parent = -1;
        Vertex vertex = -1;  // >= 0 for leaves
        std::vector<int> children;
        int leaf_count = 0;
    };
    std::vector<Node> nodes_;
    int root_ = -1;
    bool finished_ = false;

    const Node& node(int id) const;
    Node& node(int id);
};

// Tree text format: leaf = decimal vertex id, internal = '(' child (',' child)+ ')'.
// Whitespace is ignored. Example: ((0,1),(2,3))
HCTree parse_tree(const std::string& text);
std::string format_tree(const HCTree& t);

// Sum over edges of w(e) * |leaves under lca(u, v)|. Any arity.
double cost_lca(const WeightedGraph& g, const HCTree& t);

// Sum over internal nodes of w(A, B) * |A u B| with (A, B) the child leaf sets.
// Binary trees only; the split weights are computed directly from memberships,
// independently of the LCA route.
double cost_cuts(const WeightedGraph& g, const HCTree& t);

// Left-comb every multiway node: (c1,...,ck) -> (((c1,c2),c3),...,ck).
HCTree binarize(const HCTree& t);

// Every internal split satisfies max(|A|,|B|) <= (1-beta)(|A|+|B|). Binary only.
bool is_beta_balanced(const HCTree& t, double beta);

// Sum over internal nodes of (w(A, V\A) + w(B, V\B))/2 * |A u B|, cuts taken in
// the full graph. Binary only.
double w_functional(const WeightedGraph& g, const HCTree& t);

// The bipartition a binary tree induces at one internal node.
struct TreeCut {
    std::vector<Vertex> small_side, large_side;  // |small| <= |large|; tie: smaller min id first
    int node = -1;
};
std::vector<TreeCut> tree_cuts(const HCTree& t);

HCTree random_binary_tree(int n, Rng& rng);
HCTree random_balanced_tree(int n, double beta, Rng& rng);
// deterministic halving subtree over the given leaves (in the given order),
// built into t; returns the subtree's root node id
int add_balanced_subtree(HCTree& t, const std::vector<Vertex>& leaves);
// standalone halving tree; leaves must be a permutation of 0..L-1
HCTree balanced_tree_over(const std::vector<Vertex>& leaves);

}  // namespace hcs
