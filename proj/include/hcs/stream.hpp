#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcs/graph.hpp"
#include "hcs/solver.hpp"
#include "hcs/sparsify.hpp"

namespace hcs {

enum class StreamOrder { natural, shuffled, adversarial_cut_last };

// Space accounting for algorithm-owned storage, in words (3 per stored edge).
struct Meter {
    size_t words_now = 0;
    size_t words_peak = 0;
    int passes = 1;
    void add(size_t words) {
        words_now += words;
        if (words_now > words_peak) words_peak = words_now;
    }
    void sub(size_t words) { words_now -= words; }
};

StreamOrder stream_order_from_name(const std::string& name);
std::string stream_order_name(StreamOrder order);

// Memory-backed arrival sequence. Every edge is delivered exactly once per
// pass; rewinding starts a new pass.
class EdgeStream {
public:
    // natural keeps the source order (canonical for in-memory graphs, file
    // order for files); shuffled permutes it by seed; adversarial_cut_last
    // delivers edges crossing cut_side at the very end (default cut: first
    // half of the ids).
    static EdgeStream from_graph(const WeightedGraph& g, StreamOrder order = StreamOrder::natural,
                                 uint64_t seed = 0, std::vector<Vertex> cut_side = {});
    static EdgeStream from_file(const std::string& path, StreamOrder order = StreamOrder::natural,
                                uint64_t seed = 0, std::vector<Vertex> cut_side = {});

    int n() const { return n_; }
    size_t declared_m() const { return arrivals_.size(); }
    std::optional<Edge> next();
    void rewind();
    int passes_used() const { return passes_; }
    size_t position() const { return pos_; }

private:
    EdgeStream(int n, std::vector<Edge> arrivals, StreamOrder order, uint64_t seed,
               std::vector<Vertex> cut_side);

    int n_ = 0;
    std::vector<Edge> arrivals_;
    size_t pos_ = 0;
    int passes_ = 1;
};

struct StreamSolveResult {
    CostReport report;  // cost measured on the sparsifier
    WeightedGraph sparsifier;
    StreamStats stats;
};

// One pass of stream_sparsify, then the recursive solver on the result.
// report.metrics carries the stream's words_peak and pass count; wall time
// covers the whole pipeline.
StreamSolveResult stream_hc(EdgeStream& stream, const SparsifyParams& sparsify, double beta,
                            const CutFinder& finder);

}  // namespace hcs
