#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcs {

using Vertex = int;
using Weight = double;

struct Edge {
    Vertex u = 0, v = 0;
    Weight w = 1.0;
};

// Thrown for malformed graph/tree/stream text; message names the offending line.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected weighted graph on vertices 0..n-1. Parallel edges are merged at
// construction (weights add), self-loops and non-positive weights are rejected.
class WeightedGraph {
  public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    // merged edges, canonical order: u < v, sorted lexicographically
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::pair<Vertex, Weight>>& neighbors(Vertex v) const;
    Weight total_weight() const { return total_weight_; }
    Weight weighted_degree(Vertex v) const;

    // subgraph induced by verts (distinct), relabeled to 0..k-1 in the given order
    WeightedGraph induced(const std::vector<Vertex>& verts) const;
    std::vector<std::vector<Vertex>> components() const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, Weight>>> adj_;
    Weight total_weight_ = 0;
};

// Total weight between disjoint, non-empty vertex sets a and b.
Weight cut_weight(const WeightedGraph& g, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b);

// A bipartition (or partial bipartition) of vertices with its crossing weight.
struct Cut {
    std::vector<Vertex> side_a, side_b;
    Weight weight = 0;
};

// Graph text format:
//   <n> <m>
//   <u> <v> <w>     (m such lines; '#' lines and blank lines are ignored)
WeightedGraph load_graph(const std::string& path);
WeightedGraph parse_graph(std::istream& in, const std::string& stream_name);
void save_graph(const WeightedGraph& g, const std::string& path);
std::string format_graph(const WeightedGraph& g);

// Raw arrival list: preserves edge order and duplicates (merging is the
// consumer's job). Validates ids/weights/self-loops and the declared count.
struct EdgeList {
    int n = 0;
    std::vector<Edge> edges;
};
EdgeList load_edge_list(const std::string& path);
EdgeList parse_edge_list(std::istream& in, const std::string& stream_name);

std::string format_weight(Weight w);

}  // namespace hcs
