#include "hcs/stream.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hcs/rng.hpp"

namespace hcs {

StreamOrder stream_order_from_name(const std::string& name) {
    if (name == "natural") return StreamOrder::natural;
    if (name == "shuffled") return StreamOrder::shuffled;
    if (name == "adversarial") return StreamOrder::adversarial_cut_last;
    throw std::invalid_argument("unknown stream order '" + name +
                                "' (natural|shuffled|adversarial)");
}

std::string stream_order_name(StreamOrder order) {
    switch (order) {
        case StreamOrder::natural: return "natural";
        case StreamOrder::shuffled: return "shuffled";
        case StreamOrder::adversarial_cut_last: return "adversarial";
    }
    return "?";
}

EdgeStream::EdgeStream(int n, std::vector<Edge> arrivals, StreamOrder order, uint64_t seed,
                       std::vector<Vertex> cut_side)
    : n_(n), arrivals_(std::move(arrivals)) {
    switch (order) {
        case StreamOrder::natural:
            break;
        case StreamOrder::shuffled: {
            Rng rng(seed);
            rng.shuffle(arrivals_);
            break;
        }
        case StreamOrder::adversarial_cut_last: {
            std::vector<char> side(n_, 0);
            if (cut_side.empty()) {
                for (Vertex v = 0; v < n_ / 2; ++v) side[v] = 1;
            } else {
                for (Vertex v : cut_side) {
                    if (v < 0 || v >= n_)
                        throw std::invalid_argument("EdgeStream: cut vertex out of range");
                    side[v] = 1;
                }
            }
            std::stable_partition(arrivals_.begin(), arrivals_.end(),
                                  [&](const Edge& e) { return side[e.u] == side[e.v]; });
            break;
        }
    }
}

EdgeStream EdgeStream::from_graph(const WeightedGraph& g, StreamOrder order, uint64_t seed,
                                  std::vector<Vertex> cut_side) {
    return EdgeStream(g.n(), g.edges(), order, seed, std::move(cut_side));
}

EdgeStream EdgeStream::from_file(const std::string& path, StreamOrder order, uint64_t seed,
                                 std::vector<Vertex> cut_side) {
    EdgeList raw = load_edge_list(path);
    return EdgeStream(raw.n, std::move(raw.edges), order, seed, std::move(cut_side));
}

std::optional<Edge> EdgeStream::next() {
    if (pos_ >= arrivals_.size()) return std::nullopt;
    return arrivals_[pos_++];
}

void EdgeStream::rewind() {
    pos_ = 0;
    ++passes_;
}

StreamSolveResult stream_hc(EdgeStream& stream, const SparsifyParams& sparsify, double beta,
                            const CutFinder& finder) {
    auto t0 = std::chrono::steady_clock::now();
    StreamSolveResult out;
    int passes_before = stream.passes_used();
    out.sparsifier = stream_sparsify(stream, sparsify, &out.stats);
    if (stream.passes_used() != passes_before)
        throw std::logic_error("stream_hc: sparsification must stay within one pass");
    out.report = solve_offline(out.sparsifier, beta, finder);
    out.report.metrics.words_peak = out.stats.words_peak;
    out.report.metrics.passes = out.stats.passes;
    out.report.metrics.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace hcs
