#include "hcs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hcs {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("graph: endpoint out of range 0.." +
                                        std::to_string(n - 1));
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop rejected");
        if (!(e.w > 0)) throw std::invalid_argument("graph: non-positive weight rejected");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            edges_.back().w += e.w;  // merge parallels
        else
            edges_.push_back(e);
    }
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
        total_weight_ += e.w;
    }
}

const std::vector<std::pair<Vertex, Weight>>& WeightedGraph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("neighbors: vertex out of range");
    return adj_[v];
}

Weight WeightedGraph::weighted_degree(Vertex v) const {
    Weight d = 0;
    for (const auto& [u, w] : neighbors(v)) d += w;
    return d;
}

WeightedGraph WeightedGraph::induced(const std::vector<Vertex>& verts) const {
    std::vector<int> local(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        Vertex v = verts[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (local[v] != -1) throw std::invalid_argument("induced: duplicate vertex");
        local[v] = static_cast<int>(i);
    }
    std::vector<Edge> sub;
    for (const auto& e : edges_)
        if (local[e.u] != -1 && local[e.v] != -1)
            sub.push_back({local[e.u], local[e.v], e.w});
    return WeightedGraph(static_cast<int>(verts.size()), std::move(sub));
}

std::vector<std::vector<Vertex>> WeightedGraph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (const auto& [u, w] : adj_[v])
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Weight cut_weight(const WeightedGraph& g, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("cut_weight: sides must be non-empty");
    std::vector<char> side(g.n(), 0);
    for (Vertex v : a) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("cut_weight: vertex out of range");
        side[v] = 1;
    }
    for (Vertex v : b) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("cut_weight: vertex out of range");
        if (side[v]) throw std::invalid_argument("cut_weight: sides overlap");
        side[v] = 2;
    }
    Weight total = 0;
    for (const auto& e : g.edges())
        if (side[e.u] + side[e.v] == 3) total += e.w;
    return total;
}

namespace {

// one whitespace-separated content line, with its 1-based line number
struct ContentLine {
    std::string text;
    int lineno;
};

std::vector<ContentLine> content_lines(std::istream& in) {
    std::vector<ContentLine> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        out.push_back({line, no});
    }
    return out;
}

[[noreturn]] void fail(const std::string& name, int lineno, const std::string& what) {
    throw parse_error(name + ":" + std::to_string(lineno) + ": " + what);
}

EdgeList parse_edges_impl(std::istream& in, const std::string& name) {
    auto lines = content_lines(in);
    if (lines.empty()) throw parse_error(name + ": empty input, expected '<n> <m>' header");
    long long n = 0, m = 0;
    {
        std::istringstream hs(lines[0].text);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            fail(name, lines[0].lineno, "malformed header, expected '<n> <m>'");
        if (n < 0 || m < 0) fail(name, lines[0].lineno, "negative count in header");
    }
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw parse_error(name + ": declared " + std::to_string(m) + " edges but found " +
                          std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        fail(name, lines[1 + m].lineno, "unexpected extra line, declared " +
                                            std::to_string(m) + " edges");
    EdgeList el;
    el.n = static_cast<int>(n);
    el.edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const auto& [text, lineno] = lines[1 + i];
        std::istringstream es(text);
        long long u, v;
        double w;
        std::string extra;
        if (!(es >> u >> v >> w) || (es >> extra))
            fail(name, lineno, "malformed edge, expected '<u> <v> <w>'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(name, lineno, "endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) fail(name, lineno, "self-loop");
        if (!(w > 0) || !std::isfinite(w)) fail(name, lineno, "weight must be positive and finite");
        el.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    return el;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, const std::string& stream_name) {
    return parse_edges_impl(in, stream_name);
}

EdgeList load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return parse_edges_impl(in, path);
}

WeightedGraph parse_graph(std::istream& in, const std::string& stream_name) {
    EdgeList el = parse_edges_impl(in, stream_name);
    return WeightedGraph(el.n, std::move(el.edges));
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return parse_graph(in, path);
}

std::string format_weight(Weight w) {
    double r = std::round(w);
    if (r == w && std::abs(w) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", w);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

std::string format_graph(const WeightedGraph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_weight(e.w) + "\n";
    return out;
}

void save_graph(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << format_graph(g);
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace hcs
